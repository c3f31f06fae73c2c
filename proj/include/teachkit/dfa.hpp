#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "teachkit/binary_string.hpp"
#include "teachkit/error.hpp"

namespace teachkit {

using State = std::uint32_t;

/// Total deterministic automaton over {0,1}.
///
/// Concepts are represented by their canonical form: start = 0, states
/// numbered in breadth-first first-visit order (symbol 0 before 1), every
/// state reachable and no two states language-equivalent. See minimize().
class Dfa {
 public:
  Dfa() : Dfa(1) {}

  /// k states, all transitions to state 0, nothing accepting.
  explicit Dfa(std::size_t num_states)
      : delta0_(num_states, 0), delta1_(num_states, 0), accepting_(num_states, 0) {
    if (num_states == 0) throw InputError("a DFA needs at least one state");
  }

  Dfa(std::vector<State> delta0, std::vector<State> delta1, std::vector<std::uint8_t> accepting,
      State start = 0)
      : start_(start),
        delta0_(std::move(delta0)),
        delta1_(std::move(delta1)),
        accepting_(std::move(accepting)) {
    validate();
  }

  static Dfa all_strings() { return Dfa({0}, {0}, {1}); }
  static Dfa no_strings() { return Dfa({0}, {0}, {0}); }

  std::size_t num_states() const { return delta0_.size(); }
  State start() const { return start_; }
  State next(State q, int symbol) const { return symbol ? delta1_[q] : delta0_[q]; }
  bool accepting(State q) const { return accepting_[q] != 0; }

  const std::vector<State>& delta0() const { return delta0_; }
  const std::vector<State>& delta1() const { return delta1_; }
  const std::vector<std::uint8_t>& accepting_mask() const { return accepting_; }

  void set_start(State q) {
    check_state(q);
    start_ = q;
  }
  void set_transition(State q, int symbol, State target) {
    check_state(q);
    check_state(target);
    (symbol ? delta1_ : delta0_)[q] = target;
  }
  void set_accepting(State q, bool value) {
    check_state(q);
    accepting_[q] = value ? 1 : 0;
  }

  State walk(const BinaryString& s, State from) const {
    State q = from;
    for (std::size_t i = 0; i < s.size(); ++i) q = next(q, s[i]);
    return q;
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  void check_state(State q) const {
    if (q >= num_states()) throw InputError("state index " + std::to_string(q) + " out of range");
  }

  void validate() const {
    const auto k = delta0_.size();
    if (k == 0) throw InputError("a DFA needs at least one state");
    if (delta1_.size() != k || accepting_.size() != k)
      throw InputError("transition and accept tables disagree on the state count");
    check_state(start_);
    for (std::size_t q = 0; q < k; ++q) {
      check_state(delta0_[q]);
      check_state(delta1_[q]);
    }
  }

  State start_ = 0;
  std::vector<State> delta0_;
  std::vector<State> delta1_;
  std::vector<std::uint8_t> accepting_;
};

/// Membership: does d accept s?
inline bool run(const Dfa& d, const BinaryString& s) { return d.accepting(d.walk(s, d.start())); }

/// True when d is in the breadth-first numbered form (start 0, first-visit
/// order with 0 before 1, all states reachable). Minimality is not checked.
inline bool is_bfs_numbered(const Dfa& d) {
  if (d.start() != 0) return false;
  State discovered = 1;
  for (State q = 0; q < d.num_states(); ++q) {
    if (q >= discovered) return false;
    for (int a = 0; a < 2; ++a) {
      const State t = d.next(q, a);
      if (t > discovered) return false;
      if (t == discovered) ++discovered;
    }
  }
  return discovered == d.num_states();
}

/// Total order on canonical machines: (k, delta0 || delta1, accepting bits).
struct CanonicalKey {
  std::uint32_t num_states = 0;
  std::vector<State> transitions;
  std::vector<std::uint8_t> accepting;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return std::tie(a.num_states, a.transitions, a.accepting) <=>
           std::tie(b.num_states, b.transitions, b.accepting);
  }
};

/// Comparison without the canonicity check, for sorting already-canonical batches.
inline bool key_less(const Dfa& a, const Dfa& b) {
  if (a.num_states() != b.num_states()) return a.num_states() < b.num_states();
  if (a.delta0() != b.delta0()) return a.delta0() < b.delta0();
  if (a.delta1() != b.delta1()) return a.delta1() < b.delta1();
  return a.accepting_mask() < b.accepting_mask();
}

}  // namespace teachkit
