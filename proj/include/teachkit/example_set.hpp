#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "teachkit/binary_string.hpp"
#include "teachkit/dfa.hpp"
#include "teachkit/error.hpp"
#include "teachkit/text_io.hpp"

namespace teachkit {

struct LabeledExample {
  BinaryString instance;
  bool positive = true;

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

/// Finite set of labelled strings, iterated in shortlex order of instances.
/// An instance can carry only one label.
class ExampleSet {
 public:
  using Map = std::map<BinaryString, bool>;

  ExampleSet() = default;
  ExampleSet(std::initializer_list<LabeledExample> items) {
    for (const auto& e : items) insert(e);
  }

  /// Adds an example; re-adding with the same label is a no-op.
  void insert(const LabeledExample& e) {
    auto [it, fresh] = items_.emplace(e.instance, e.positive);
    if (!fresh && it->second != e.positive)
      throw InputError("contradictory labels for instance " + e.instance.str());
  }
  void insert(const BinaryString& s, bool positive) { insert({s, positive}); }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const BinaryString& s) const { return items_.count(s) != 0; }
  Map::const_iterator begin() const { return items_.begin(); }
  Map::const_iterator end() const { return items_.end(); }

  friend bool operator==(const ExampleSet&, const ExampleSet&) = default;

 private:
  Map items_;
};

/// Examples for `strings`, labelled by `d`.
template <typename Range>
ExampleSet label_with(const Dfa& d, const Range& strings) {
  ExampleSet out;
  for (const auto& s : strings) out.insert(s, run(d, s));
  return out;
}

// Example-set format: one example per line, "+ <bits>" or "- <bits>", with
// the empty string written "eps".

inline std::string format_examples(const ExampleSet& set) {
  std::ostringstream out;
  for (const auto& [s, positive] : set) out << (positive ? '+' : '-') << ' ' << s.str() << '\n';
  return out.str();
}

inline ExampleSet parse_examples(std::string_view text) {
  ExampleSet out;
  for (const auto& [number, line] : content_lines(text)) {
    const auto words = split_words(line);
    if (words.size() != 2 || (words[0] != "+" && words[0] != "-"))
      throw InputError("examples line " + std::to_string(number) + ": expected '+ <bits>' or '- <bits>'");
    out.insert(BinaryString::parse(words[1]), words[0] == "+");
  }
  return out;
}

}  // namespace teachkit
