#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "teachkit/binary_string.hpp"
#include "teachkit/dfa.hpp"
#include "teachkit/example_set.hpp"
#include "teachkit/teaching.hpp"
#include "teachkit/tiny_machine.hpp"

namespace teachkit {

/// Valid programs of each length, built on first use.
inline const std::vector<TinyProgram>& cached_programs(std::size_t length) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<TinyProgram>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(length);
  if (it == cache.end()) it = cache.emplace(length, programs_of_length(length)).first;
  return it->second;
}

/// Kt(p, S) = l(p) + log2(total steps over S).
inline double kt_value(std::size_t program_length, std::uint64_t total_steps) {
  return static_cast<double>(program_length) + std::log2(static_cast<double>(total_steps));
}

/// Runs p over every example with one shared step allowance. Returns the
/// total steps used when p labels all of them correctly within it.
inline std::optional<std::uint64_t> run_consistent(const TinyProgram& p, const ExampleSet& examples,
                                                   std::uint64_t allowance, std::uint64_t* executed = nullptr) {
  std::uint64_t used = 0;
  for (const auto& [s, positive] : examples) {
    const auto r = run_tiny(p, s, allowance - used);
    used += r.steps;
    if (executed) *executed += r.steps;
    if (r.halt == Halt::Timeout || (r.halt == Halt::Accept) != positive) return std::nullopt;
  }
  return used;
}

struct KtOutcome {
  bool found = false;
  std::optional<TinyProgram> program;
  double kt = 0.0;
  std::uint64_t total_steps = 0;     ///< steps of the returned program over S
  int budget = 0;                    ///< budget at which it was found, or budget_max
  std::uint64_t executed_steps = 0;  ///< every step the search executed
};

/// Upper bound on executed steps for budgets 1..budget_max: at most 2^l
/// programs of length l, each with allowance 2^(B-l).
inline long double kt_step_bound(int budget_max) {
  long double total = 0;
  for (int b = 1; b <= budget_max; ++b)
    for (int l = 0; l < b; ++l) total += std::ldexp(1.0L, l) * std::ldexp(1.0L, b - l);
  return total;
}

/// Dovetailing learner. For B = 1..budget_max, tries programs with l(p) < B in
/// (length, lexicographic) order, each with 2^(B - l(p)) steps shared across
/// all of S, and returns the first consistent one.
inline KtOutcome kt_learn(const ExampleSet& examples, int budget_max) {
  KtOutcome out;
  for (int budget = 1; budget <= budget_max; ++budget) {
    for (int len = 1; len < budget; ++len) {
      const auto allowance = std::uint64_t{1} << (budget - len);
      for (const auto& p : cached_programs(static_cast<std::size_t>(len))) {
        if (auto steps = run_consistent(p, examples, allowance, &out.executed_steps)) {
          out.found = true;
          out.program = p;
          out.total_steps = *steps;
          out.kt = kt_value(p.length(), std::max<std::uint64_t>(*steps, 1));
          out.budget = budget;
          return out;
        }
      }
    }
  }
  out.budget = budget_max;
  return out;
}

struct KtTeachResult {
  bool found = false;
  TeachingResult teaching;  ///< exact is always false: agreement is only checked on the pool
  std::optional<TinyProgram> program;
  KtOutcome learner;
  bool uncertified = true;
};

/// Bounded teacher for the Kt learner. Searches example sets over the pool
/// (strings of length <= pool_max_len labelled by `oracle`) by increasing
/// size, in lexicographic order, for one whose learned program agrees with
/// the oracle on the whole pool. Agreement runs each pool string with the
/// learned program's per-budget allowance. Never certified: equivalence
/// beyond the pool is not decided.
inline KtTeachResult kt_teach(const Dfa& oracle, int pool_max_len, int budget_max, std::size_t size_cap) {
  const auto pool = strings_up_to(pool_max_len);
  KtTeachResult out;
  std::vector<std::size_t> picked;

  auto agrees = [&](const KtOutcome& learned) {
    const auto allowance = std::uint64_t{1} << (learned.budget - static_cast<int>(learned.program->length()));
    for (const auto& s : pool) {
      const auto r = run_tiny(*learned.program, s, allowance);
      if (r.halt == Halt::Timeout || (r.halt == Halt::Accept) != run(oracle, s)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t start, std::size_t remaining) -> bool {
    if (remaining == 0) {
      ExampleSet set;
      for (auto i : picked) set.insert(pool[i], run(oracle, pool[i]));
      auto learned = kt_learn(set, budget_max);
      if (!learned.found || !agrees(learned)) return false;
      out.found = true;
      out.teaching.witness = set;
      out.teaching.dimension = set.size();
      out.teaching.pool_max_len = pool_max_len;
      out.program = learned.program;
      out.learner = learned;
      return true;
    }
    for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
      picked.push_back(i);
      if (self(self, i + 1, remaining - 1)) return true;
      picked.pop_back();
    }
    return false;
  };

  for (std::size_t m = 0; m <= std::min(size_cap, pool.size()); ++m) {
    picked.clear();
    if (search(search, 0, m)) return out;
  }
  return out;
}

}  // namespace teachkit
