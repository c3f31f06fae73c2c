#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "teachkit/dfa.hpp"

namespace teachkit {

namespace detail {

/// States reachable from start, in breadth-first order (symbol 0 first).
inline std::vector<State> reachable_bfs(const Dfa& d) {
  std::vector<State> order{d.start()};
  std::vector<std::uint8_t> seen(d.num_states(), 0);
  seen[d.start()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int a = 0; a < 2; ++a) {
      const State t = d.next(order[i], a);
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  return order;
}

/// Hopcroft partition refinement restricted to `states`. Returns the block
/// index of every state (-1 for states outside `states`) and the block count.
inline std::pair<std::vector<int>, int> hopcroft_blocks(const Dfa& d, const std::vector<State>& states) {
  const std::size_t n = d.num_states();
  std::vector<int> block(n, -1);
  std::vector<std::vector<State>> members;

  std::vector<State> finals, nonfinals;
  for (State q : states) (d.accepting(q) ? finals : nonfinals).push_back(q);
  for (auto* group : {&nonfinals, &finals}) {
    if (group->empty()) continue;
    for (State q : *group) block[q] = static_cast<int>(members.size());
    members.push_back(*group);
  }
  if (members.size() < 2) return {block, static_cast<int>(members.size())};

  // inverse[a][q] = predecessors of q on symbol a, within `states`.
  std::vector<std::vector<State>> inverse[2] = {std::vector<std::vector<State>>(n),
                                                std::vector<std::vector<State>>(n)};
  for (State q : states)
    for (int a = 0; a < 2; ++a) inverse[a][d.next(q, a)].push_back(q);

  std::deque<std::pair<int, int>> work;
  std::vector<std::array<std::uint8_t, 2>> queued;
  auto enqueue = [&](int b, int a) {
    if (static_cast<std::size_t>(b) >= queued.size()) queued.resize(b + 1, {0, 0});
    if (!queued[b][a]) {
      queued[b][a] = 1;
      work.emplace_back(b, a);
    }
  };
  const int smaller = members[0].size() <= members[1].size() ? 0 : 1;
  enqueue(smaller, 0);
  enqueue(smaller, 1);

  std::vector<std::uint8_t> marked(n, 0);
  std::vector<std::size_t> hits;
  while (!work.empty()) {
    const auto [splitter, a] = work.front();
    work.pop_front();
    queued[splitter][a] = 0;

    std::vector<State> pre;
    for (State t : members[splitter])
      for (State p : inverse[a][t]) pre.push_back(p);
    if (pre.empty()) continue;

    hits.assign(members.size(), 0);
    std::vector<int> touched;
    for (State p : pre) {
      if (marked[p]) continue;
      marked[p] = 1;
      if (hits[block[p]]++ == 0) touched.push_back(block[p]);
    }
    for (int y : touched) {
      if (hits[y] == members[y].size()) continue;
      std::vector<State> inside, outside;
      for (State q : members[y]) (marked[q] ? inside : outside).push_back(q);
      const int z = static_cast<int>(members.size());
      members[y] = std::move(outside);
      members.push_back(std::move(inside));
      for (State q : members[z]) block[q] = z;
      for (int c = 0; c < 2; ++c) {
        if (static_cast<std::size_t>(y) < queued.size() && queued[y][c])
          enqueue(z, c);
        else
          enqueue(members[y].size() <= members[z].size() ? y : z, c);
      }
    }
    for (State p : pre) marked[p] = 0;
  }
  return {block, static_cast<int>(members.size())};
}

}  // namespace detail

/// Canonical minimal DFA for L(d): unreachable states dropped, equivalent
/// states merged (Hopcroft), states renumbered breadth-first from start.
inline Dfa minimize(const Dfa& d) {
  const auto reachable = detail::reachable_bfs(d);
  const auto [block, num_blocks] = detail::hopcroft_blocks(d, reachable);

  std::vector<int> label(num_blocks, -1);
  std::vector<int> order{block[d.start()]};
  label[order[0]] = 0;
  std::vector<State> rep(num_blocks);
  for (State q : reachable) rep[block[q]] = q;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int a = 0; a < 2; ++a) {
      const int b = block[d.next(rep[order[i]], a)];
      if (label[b] < 0) {
        label[b] = static_cast<int>(order.size());
        order.push_back(b);
      }
    }
  }

  const auto k = order.size();
  std::vector<State> delta0(k), delta1(k);
  std::vector<std::uint8_t> accepting(k);
  for (std::size_t i = 0; i < k; ++i) {
    const State q = rep[order[i]];
    delta0[i] = static_cast<State>(label[block[d.next(q, 0)]]);
    delta1[i] = static_cast<State>(label[block[d.next(q, 1)]]);
    accepting[i] = d.accepting(q) ? 1 : 0;
  }
  return Dfa(std::move(delta0), std::move(delta1), std::move(accepting), 0);
}

/// Number of states of the minimal equivalent machine (the concept's complexity).
inline std::size_t minimal_size(const Dfa& d) {
  return static_cast<std::size_t>(detail::hopcroft_blocks(d, detail::reachable_bfs(d)).second);
}

/// All states reachable and pairwise inequivalent.
inline bool is_minimal(const Dfa& d) { return minimal_size(d) == d.num_states(); }

inline bool is_canonical(const Dfa& d) { return is_bfs_numbered(d) && is_minimal(d); }

/// Rejects machines that are not canonical.
inline CanonicalKey canonical_key(const Dfa& d) {
  if (!is_canonical(d)) throw InputError("canonical_key requires a canonical minimal DFA");
  CanonicalKey key;
  key.num_states = static_cast<std::uint32_t>(d.num_states());
  key.transitions = d.delta0();
  key.transitions.insert(key.transitions.end(), d.delta1().begin(), d.delta1().end());
  key.accepting = d.accepting_mask();
  return key;
}

}  // namespace teachkit
