#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Dfa container, and favour obviousness over speed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "teachkit/dfa.hpp"
#include "teachkit/example_set.hpp"

namespace oracle {

using teachkit::Dfa;
using teachkit::State;

/// Every 0/1 string of length <= n, shortest first, then lexicographic.
inline std::vector<std::string> words_up_to(int n) {
  std::vector<std::string> out{""};
  for (int len = 1; len <= n; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string w;
      for (int i = len - 1; i >= 0; --i) w.push_back(((v >> i) & 1) ? '1' : '0');
      out.push_back(w);
    }
  return out;
}

inline State walk(const Dfa& d, State q, const std::string& w) {
  for (char ch : w) q = d.next(q, ch - '0');
  return q;
}

inline bool accepts(const Dfa& d, const std::string& w) { return d.accepting(walk(d, d.start(), w)); }

/// Myhill-Nerode count: reachable states grouped by their residual language on
/// suffixes up to `depth` (k-1 suffices for a k-state machine).
inline std::size_t nerode_size(const Dfa& d, int depth = -1) {
  const auto k = d.num_states();
  if (depth < 0) depth = static_cast<int>(k);
  const auto suffixes = words_up_to(depth);
  std::set<State> reachable;
  for (const auto& w : words_up_to(static_cast<int>(k))) reachable.insert(walk(d, d.start(), w));
  std::set<std::vector<bool>> rows;
  for (State q : reachable) {
    std::vector<bool> row;
    for (const auto& s : suffixes) row.push_back(d.accepting(walk(d, q, s)));
    rows.insert(row);
  }
  return rows.size();
}

/// Shortest distinguishing string by trying every word in shortlex order.
inline std::optional<std::string> first_difference(const Dfa& a, const Dfa& b) {
  const int bound = static_cast<int>(a.num_states() + b.num_states());
  for (const auto& w : words_up_to(bound))
    if (accepts(a, w) != accepts(b, w)) return w;
  return std::nullopt;
}

inline bool same_language(const Dfa& a, const Dfa& b) { return !first_difference(a, b); }

/// Signature of a language on all words of length <= n.
inline std::vector<bool> signature(const Dfa& d, int n) {
  std::vector<bool> out;
  for (const auto& w : words_up_to(n)) out.push_back(accepts(d, w));
  return out;
}

/// All DFAs with k states and start 0, in a fixed order.
template <class F>
void for_each_dfa(std::size_t k, F&& f) {
  const std::size_t slots = 2 * k;
  std::vector<State> t(slots, 0);
  while (true) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Dfa d(k);
      for (std::size_t q = 0; q < k; ++q) {
        d.set_transition(static_cast<State>(q), 0, t[2 * q]);
        d.set_transition(static_cast<State>(q), 1, t[2 * q + 1]);
        d.set_accepting(static_cast<State>(q), (mask >> q) & 1);
      }
      f(d);
    }
    std::size_t i = 0;
    while (i < slots && ++t[i] == k) t[i++] = 0;
    if (i == slots) return;
  }
}

/// Number of distinct languages whose minimal DFA has exactly k states.
inline std::size_t languages_with_size(std::size_t k) {
  std::set<std::vector<bool>> seen;
  const int n = static_cast<int>(2 * k);
  for_each_dfa(k, [&](const Dfa& d) {
    if (nerode_size(d) == k) seen.insert(signature(d, n));
  });
  return seen.size();
}

inline Dfa random_dfa(std::size_t k, std::mt19937_64& rng) {
  Dfa d(k);
  std::uniform_int_distribution<State> pick(0, static_cast<State>(k - 1));
  for (std::size_t q = 0; q < k; ++q) {
    d.set_transition(static_cast<State>(q), 0, pick(rng));
    d.set_transition(static_cast<State>(q), 1, pick(rng));
    d.set_accepting(static_cast<State>(q), rng() & 1);
  }
  d.set_start(pick(rng));
  return d;
}

/// Elias gamma by repeated halving.
inline std::string gamma(std::uint64_t n) {
  std::string bin;
  for (auto v = n; v > 0; v /= 2) bin.insert(bin.begin(), static_cast<char>('0' + v % 2));
  return std::string(bin.size() - 1, '0') + bin;
}

/// Labels consistent with d for a list of words.
inline bool agrees(const Dfa& d, const teachkit::ExampleSet& s) {
  for (const auto& [w, positive] : s)
    if (accepts(d, w.bits()) != positive) return false;
  return true;
}

/// Minimum number of rows to pick (subsets in increasing size) so that `ok` holds.
template <class Ok>
std::optional<std::size_t> smallest_subset(std::size_t n, std::size_t max_size, Ok&& ok) {
  for (std::size_t m = 0; m <= std::min(n, max_size); ++m) {
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    while (true) {
      if (ok(pick)) return m;
      std::size_t i = m;
      while (i > 0 && pick[i - 1] == n - m + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace oracle
