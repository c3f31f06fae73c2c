#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "teachkit/dfa.hpp"

namespace teachkit {

/// L(a) == L(b), by the Hopcroft-Karp union-find merge (near-linear).
inline bool equivalent(const Dfa& a, const Dfa& b) {
  const std::size_t offset = a.num_states();
  std::vector<std::size_t> parent(offset + b.num_states());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto accepts = [&](std::size_t x) {
    return x < offset ? a.accepting(static_cast<State>(x)) : b.accepting(static_cast<State>(x - offset));
  };
  auto step = [&](std::size_t x, int sym) -> std::size_t {
    return x < offset ? a.next(static_cast<State>(x), sym)
                      : offset + b.next(static_cast<State>(x - offset), sym);
  };

  std::vector<std::pair<std::size_t, std::size_t>> stack{{a.start(), offset + b.start()}};
  parent[find(offset + b.start())] = find(a.start());
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    if (accepts(p) != accepts(q)) return false;
    for (int sym = 0; sym < 2; ++sym) {
      const auto rp = find(step(p, sym));
      const auto rq = find(step(q, sym));
      if (rp != rq) {
        parent[rq] = rp;
        stack.emplace_back(step(p, sym), step(q, sym));
      }
    }
  }
  return true;
}

/// Shortlex-least string accepted by exactly one of a and b, or nullopt when
/// the languages coincide. Breadth-first search over the product pair graph.
inline std::optional<BinaryString> distinguishing_string(const Dfa& a, const Dfa& b) {
  const std::size_t nb = b.num_states();
  const std::size_t pairs = a.num_states() * nb;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(pairs, none);
  std::vector<std::uint8_t> via(pairs, 0);
  std::vector<std::uint8_t> seen(pairs, 0);

  auto id = [nb](State p, State q) { return static_cast<std::size_t>(p) * nb + q; };
  auto path_to = [&](std::size_t node) {
    std::vector<int> rev;
    for (; parent[node] != none; node = parent[node]) rev.push_back(via[node]);
    BinaryString out;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.push_back(*it);
    return out;
  };

  std::vector<std::size_t> queue{id(a.start(), b.start())};
  seen[queue[0]] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t node = queue[i];
    const auto p = static_cast<State>(node / nb);
    const auto q = static_cast<State>(node % nb);
    if (a.accepting(p) != b.accepting(q)) return path_to(node);
    for (int sym = 0; sym < 2; ++sym) {
      const std::size_t succ = id(a.next(p, sym), b.next(q, sym));
      if (seen[succ]) continue;
      seen[succ] = 1;
      parent[succ] = node;
      via[succ] = static_cast<std::uint8_t>(sym);
      queue.push_back(succ);
    }
  }
  return std::nullopt;
}

/// The pair of k-state machines whose shortest distinguishing string is
/// 0^(k-1) 1^(k-1), showing the 2k-2 bound is tight. k >= 2.
///
/// States 1..k are numbered 0..k-1 here. Symbol 0 climbs towards the top
/// state, symbol 1 descends towards the bottom state, the bottom state is the
/// only rejecting one and the top state loops on 0. The machines differ only
/// on the 1-edge of the top state: `first` keeps it at the top, `second`
/// steps down.
inline std::pair<Dfa, Dfa> tight_pair(std::size_t k) {
  if (k < 2) throw InputError("tight_pair needs k >= 2");
  Dfa first(k);
  for (State q = 0; q < k; ++q) {
    first.set_transition(q, 0, q + 1 < k ? q + 1 : q);
    first.set_transition(q, 1, q > 0 ? q - 1 : 0);
    first.set_accepting(q, q != 0);
  }
  Dfa second = first;
  const auto top = static_cast<State>(k - 1);
  first.set_transition(top, 1, top);
  second.set_transition(top, 1, top - 1);
  return {first, second};
}

}  // namespace teachkit
