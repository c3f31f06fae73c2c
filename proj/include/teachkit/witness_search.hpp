#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace teachkit {

using Bitset = boost::dynamic_bitset<>;

/// Result of a covering search over an ordered pool of candidates.
struct CoverResult {
  std::vector<std::size_t> chosen;  ///< ascending pool indices
  bool exact = false;               ///< proven minimum (and lex-least among minima)
};

/// Finds the smallest set of pool entries whose `eliminates` sets jointly
/// cover every competitor in [0, universe). Among minimum covers the one with
/// the lexicographically least index tuple is returned.
///
/// Iterative deepening on the cover size m = 0..size_cap. Two prunings:
/// a pick must eliminate at least one survivor (otherwise the rest would be a
/// smaller cover), and picking index i is useless once some survivor's last
/// eliminating index lies before i. Above size_cap a greedy cover is returned
/// with exact = false. Returns nullopt when no cover exists at all.
inline std::optional<CoverResult> minimum_cover(const std::vector<Bitset>& eliminates, std::size_t universe,
                                                std::size_t size_cap) {
  const std::size_t n = eliminates.size();
  Bitset all(universe);
  all.set();
  Bitset reach(universe);
  for (const auto& e : eliminates) reach |= e;
  if (reach != all) return std::nullopt;

  // must[i]: competitors that only indices < i can eliminate.
  std::vector<Bitset> must(n + 1, Bitset(universe));
  {
    std::vector<std::size_t> last(universe, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (auto e = eliminates[i].find_first(); e != Bitset::npos; e = eliminates[i].find_next(e)) last[e] = i;
    for (std::size_t e = 0; e < universe; ++e)
      for (std::size_t i = last[e] + 1; i <= n; ++i) must[i].set(e);
  }

  std::vector<std::size_t> picked;
  auto search = [&](auto&& self, std::size_t start, std::size_t remaining, const Bitset& covered) -> bool {
    if (remaining == 0) return covered == all;
    const Bitset open = all - covered;
    for (std::size_t i = start; i + remaining <= n; ++i) {
      if (!must[i].is_subset_of(covered)) break;
      if (!eliminates[i].intersects(open)) continue;
      if (remaining == 1 && !open.is_subset_of(eliminates[i])) continue;
      picked.push_back(i);
      if (self(self, i + 1, remaining - 1, covered | eliminates[i])) return true;
      picked.pop_back();
    }
    return false;
  };

  const Bitset none(universe);
  for (std::size_t m = 0; m <= std::min(size_cap, n); ++m) {
    picked.clear();
    if (search(search, 0, m, none)) return CoverResult{picked, true};
  }

  CoverResult greedy;
  Bitset covered(universe);
  while (covered != all) {
    std::size_t best = n, best_gain = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto gain = (eliminates[i] - covered).count();
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    greedy.chosen.push_back(best);
    covered |= eliminates[best];
  }
  std::sort(greedy.chosen.begin(), greedy.chosen.end());
  return greedy;
}

}  // namespace teachkit
