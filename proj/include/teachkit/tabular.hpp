#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "teachkit/error.hpp"
#include "teachkit/rational.hpp"
#include "teachkit/text_io.hpp"
#include "teachkit/witness_search.hpp"

namespace teachkit {

/// One explicitly listed concept: its labels on the named instances and its prior.
struct TabularConcept {
  std::string name;
  std::vector<std::uint8_t> row;
  Rational mass;
};

/// A finite listing of the most likely concepts of a (possibly infinite)
/// class plus a residual "rest" mass. The rest never competes in argmax
/// decisions; rest_schedule[i] is the fraction of the remaining rest mass
/// that survives the (i+1)-th example.
struct TabularClass {
  std::vector<std::string> instances;
  std::vector<TabularConcept> concepts;
  Rational rest_mass{0};
  std::vector<Rational> rest_schedule;

  std::size_t instance_index(std::string_view name) const {
    for (std::size_t i = 0; i < instances.size(); ++i)
      if (instances[i] == name) return i;
    throw InputError("unknown instance '" + std::string(name) + "'");
  }

  std::size_t concept_index(std::string_view name) const {
    for (std::size_t i = 0; i < concepts.size(); ++i)
      if (concepts[i].name == name) return i;
    throw InputError("unknown concept '" + std::string(name) + "'");
  }

  void validate() const {
    Rational total = rest_mass;
    if (rest_mass < Rational(0)) throw InputError("rest mass must be non-negative");
    for (const auto& c : concepts) {
      if (c.row.size() != instances.size())
        throw InputError("concept " + c.name + " has " + std::to_string(c.row.size()) + " labels, expected " +
                         std::to_string(instances.size()));
      if (c.mass < Rational(0)) throw InputError("concept " + c.name + " has negative mass");
      total += c.mass;
    }
    if (std::abs(to_double(total) - 1.0) > 1e-9)
      throw InputError("masses sum to " + to_string(total) + ", expected 1");
    for (const auto& f : rest_schedule)
      if (f < Rational(0) || f > Rational(1)) throw InputError("rest schedule fractions must lie in [0,1]");
  }
};

/// An example over the named instances.
struct NamedExample {
  std::string instance;
  bool positive = true;
};

// Tabular-class format:
//   instances <n1> <n2> ...
//   concept <name> <bitrow> <mass>
//   rest <mass> <f1> <f2> ...
inline TabularClass parse_tabular_class(std::string_view text) {
  TabularClass cls;
  bool have_instances = false, have_rest = false;
  for (const auto& [number, line] : content_lines(text)) {
    const auto words = split_words(line);
    auto fail = [n = number](const std::string& msg) {
      return InputError("class line " + std::to_string(n) + ": " + msg);
    };
    if (words[0] == "instances") {
      if (have_instances) throw fail("duplicate instances line");
      cls.instances.assign(words.begin() + 1, words.end());
      have_instances = true;
    } else if (words[0] == "concept") {
      if (words.size() != 4) throw fail("expected 'concept <name> <bitrow> <mass>'");
      TabularConcept c;
      c.name = words[1];
      for (char ch : words[2]) {
        if (ch != '0' && ch != '1') throw fail("bad label row '" + words[2] + "'");
        c.row.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
      c.mass = parse_rational(words[3]);
      for (const auto& other : cls.concepts)
        if (other.name == c.name) throw fail("duplicate concept '" + c.name + "'");
      cls.concepts.push_back(std::move(c));
    } else if (words[0] == "rest") {
      if (have_rest || words.size() < 2) throw fail("expected one 'rest <mass> <fractions...>' line");
      cls.rest_mass = parse_rational(words[1]);
      for (std::size_t i = 2; i < words.size(); ++i) cls.rest_schedule.push_back(parse_rational(words[i]));
      have_rest = true;
    } else {
      throw fail("unknown keyword '" + words[0] + "'");
    }
  }
  if (!have_instances) throw InputError("class: missing instances line");
  cls.validate();
  return cls;
}

/// Examples over instance names: "+ <name>" / "- <name>", order preserved.
inline std::vector<NamedExample> parse_named_examples(std::string_view text) {
  std::vector<NamedExample> out;
  for (const auto& [number, line] : content_lines(text)) {
    const auto words = split_words(line);
    if (words.size() != 2 || (words[0] != "+" && words[0] != "-"))
      throw InputError("examples line " + std::to_string(number) + ": expected '+ <name>' or '- <name>'");
    out.push_back({words[1], words[0] == "+"});
  }
  return out;
}

/// Masses after conditioning on a sequence of examples.
struct PosteriorState {
  std::vector<Rational> masses;  ///< surviving prior mass per listed concept (0 if inconsistent)
  Rational rest{0};              ///< surviving rest mass
  Rational normalizer{1};        ///< m_w(S)

  Rational posterior(std::size_t i) const { return normalizer == Rational(0) ? Rational(0) : masses[i] / normalizer; }
  Rational rest_posterior() const { return normalizer == Rational(0) ? Rational(0) : rest / normalizer; }
};

/// States after each prefix of `examples`: element 0 is the prior, element i
/// the posterior after the first i examples. Order matters for the rest decay.
inline std::vector<PosteriorState> posterior_trace(const TabularClass& cls, const std::vector<NamedExample>& examples) {
  if (examples.size() > cls.rest_schedule.size())
    throw InputError("rest schedule has " + std::to_string(cls.rest_schedule.size()) + " fractions for " +
                     std::to_string(examples.size()) + " examples");
  std::vector<PosteriorState> trace;
  PosteriorState state;
  for (const auto& c : cls.concepts) state.masses.push_back(c.mass);
  state.rest = cls.rest_mass;
  auto renormalize = [](PosteriorState& s) {
    s.normalizer = s.rest;
    for (const auto& m : s.masses) s.normalizer += m;
  };
  renormalize(state);
  trace.push_back(state);
  for (std::size_t step = 0; step < examples.size(); ++step) {
    const auto idx = cls.instance_index(examples[step].instance);
    for (std::size_t i = 0; i < cls.concepts.size(); ++i)
      if ((cls.concepts[i].row[idx] != 0) != examples[step].positive) state.masses[i] = 0;
    state.rest *= cls.rest_schedule[step];
    renormalize(state);
    trace.push_back(state);
  }
  return trace;
}

inline PosteriorState posterior(const TabularClass& cls, const std::vector<NamedExample>& examples) {
  return posterior_trace(cls, examples).back();
}

namespace detail {

/// Smallest instance subset (labels from the target row) eliminating every
/// listed concept selected by `competes`. Exhaustive over all instances.
template <typename Pred>
std::vector<std::size_t> tabular_witness(const TabularClass& cls, std::string_view target, Pred&& competes) {
  const auto t = cls.concept_index(target);
  std::vector<std::size_t> rivals;
  for (std::size_t i = 0; i < cls.concepts.size(); ++i)
    if (i != t && competes(cls.concepts[i], cls.concepts[t])) rivals.push_back(i);
  std::vector<Bitset> eliminates(cls.instances.size(), Bitset(rivals.size()));
  for (std::size_t x = 0; x < cls.instances.size(); ++x)
    for (std::size_t j = 0; j < rivals.size(); ++j)
      if (cls.concepts[rivals[j]].row[x] != cls.concepts[t].row[x]) eliminates[x].set(j);
  const auto cover = minimum_cover(eliminates, rivals.size(), cls.instances.size());
  if (!cover) throw NoWitness("concept " + std::string(target) + " cannot be singled out by the listed instances");
  return cover->chosen;
}

}  // namespace detail

/// Witness instances making `target` the unique highest-mass consistent listed concept.
inline std::vector<std::size_t> btd_tabular_witness(const TabularClass& cls, std::string_view target) {
  return detail::tabular_witness(cls, target,
                                 [](const TabularConcept& other, const TabularConcept& t) { return other.mass >= t.mass; });
}

/// Biased teaching dimension within the listed concepts. Throws NoWitness.
inline std::size_t btd_tabular(const TabularClass& cls, std::string_view target) {
  return btd_tabular_witness(cls, target).size();
}

/// Witness instances making `target` the only consistent listed concept.
inline std::vector<std::size_t> td_tabular_witness(const TabularClass& cls, std::string_view target) {
  return detail::tabular_witness(cls, target, [](const TabularConcept&, const TabularConcept&) { return true; });
}

/// Classical teaching dimension of the truncated (listed-only) class. Throws NoWitness.
inline std::size_t td_tabular(const TabularClass& cls, std::string_view target) {
  return td_tabular_witness(cls, target).size();
}

}  // namespace teachkit
