#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "teachkit/error.hpp"

namespace teachkit {

/// A finite word over {0,1}, ordered shortlex (length first, then 0 < 1).
class BinaryString {
 public:
  BinaryString() = default;

  /// Parses "0110"; "eps" and "" both denote the empty word.
  static BinaryString parse(std::string_view text) {
    BinaryString out;
    if (text == "eps") return out;
    for (char ch : text) {
      if (ch != '0' && ch != '1') throw InputError("bad bit string '" + std::string(text) + "'");
      out.bits_.push_back(ch);
    }
    return out;
  }

  static BinaryString repeat(char bit, std::size_t count) {
    BinaryString out;
    out.bits_.assign(count, bit);
    return out;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] - '0'; }

  void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
  BinaryString operator+(const BinaryString& rhs) const {
    BinaryString out = *this;
    out.bits_ += rhs.bits_;
    return out;
  }

  /// Raw bits; empty for epsilon.
  const std::string& bits() const { return bits_; }
  /// Display form: "eps" for the empty word.
  std::string str() const { return bits_.empty() ? std::string("eps") : bits_; }

  friend bool operator==(const BinaryString&, const BinaryString&) = default;
  friend std::strong_ordering operator<=>(const BinaryString& a, const BinaryString& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

/// All words of length <= max_len in shortlex order (2^(max_len+1) - 1 of them).
inline std::vector<BinaryString> strings_up_to(int max_len) {
  std::vector<BinaryString> out;
  if (max_len < 0) return out;
  out.emplace_back();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_len) continue;
    for (int bit = 0; bit < 2; ++bit) {
      BinaryString next = out[i];
      next.push_back(bit);
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace teachkit
