#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "teachkit/dfa.hpp"
#include "teachkit/error.hpp"
#include "teachkit/minimize.hpp"

namespace teachkit {

inline constexpr int kDefaultEnumerationCap = 4;

/// C_k: every canonical minimal binary DFA with exactly k states, sorted by
/// canonical key.
struct ConceptBatch {
  int k = 0;
  std::vector<Dfa> concepts;

  std::size_t count() const { return concepts.size(); }
};

namespace detail {

// Fills transitions in the order (0,0),(0,1),(1,0),... where a target may be
// any discovered state or the next undiscovered label. This yields each
// initially-connected machine exactly once, already in BFS numbering.
template <typename Visit>
void for_each_bfs_skeleton(int k, Visit&& visit) {
  std::vector<State> delta0(k), delta1(k);
  const int slots = 2 * k;
  auto rec = [&](auto&& self, int slot, int discovered) -> void {
    if (slot == slots) {
      if (discovered == k) visit(delta0, delta1);
      return;
    }
    const int q = slot / 2;
    if (q >= discovered) return;
    // A state can only be discovered by a slot; too few slots left means a dead end.
    if (k - discovered > slots - slot) return;
    auto& row = (slot % 2 == 0) ? delta0 : delta1;
    const int limit = std::min(discovered, k - 1);
    for (int t = 0; t <= limit; ++t) {
      row[q] = static_cast<State>(t);
      self(self, slot + 1, t == discovered ? discovered + 1 : discovered);
    }
  };
  rec(rec, 0, 1);
}

}  // namespace detail

/// Builds C_k from scratch. Throws ResourceLimit when k exceeds `cap`.
inline ConceptBatch enumerate_batch(int k, int cap = kDefaultEnumerationCap) {
  if (k < 1) throw InputError("batch index k must be >= 1");
  if (k > cap)
    throw ResourceLimit("enumeration of k=" + std::to_string(k) + " exceeds the configured cap k<=" +
                        std::to_string(cap));
  ConceptBatch batch;
  batch.k = k;
  std::vector<std::uint8_t> accepting(k);
  detail::for_each_bfs_skeleton(k, [&](const std::vector<State>& d0, const std::vector<State>& d1) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      for (int q = 0; q < k; ++q) accepting[q] = (mask >> q) & 1u;
      Dfa d(d0, d1, accepting, 0);
      if (is_minimal(d)) batch.concepts.push_back(std::move(d));
    }
  });
  std::sort(batch.concepts.begin(), batch.concepts.end(), key_less);
  return batch;
}

/// Thread-safe lazy cache of batches C_1..C_cap.
class BatchCatalog {
 public:
  explicit BatchCatalog(int cap = kDefaultEnumerationCap) : cap_(cap) {}

  int cap() const { return cap_; }

  const ConceptBatch& batch(int k) const {
    if (k < 1) throw InputError("batch index k must be >= 1");
    if (k > cap_)
      throw ResourceLimit("enumeration of k=" + std::to_string(k) + " exceeds the configured cap k<=" +
                          std::to_string(cap_));
    std::lock_guard lock(mutex_);
    auto& slot = batches_[k];
    if (!slot) slot = std::make_unique<ConceptBatch>(enumerate_batch(k, cap_));
    return *slot;
  }

  /// N_{<=k}.
  std::size_t count_up_to(int k) const {
    std::size_t total = 0;
    for (int j = 1; j <= k; ++j) total += batch(j).count();
    return total;
  }

 private:
  int cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<ConceptBatch>> batches_;
};

/// Process-wide catalog with the default cap.
inline const BatchCatalog& default_catalog() {
  static const BatchCatalog catalog;
  return catalog;
}

inline std::size_t count_up_to(int k, const BatchCatalog& catalog = default_catalog()) {
  return catalog.count_up_to(k);
}

/// Uniform draw from C_k, a pure function of (k, seed).
///
/// Within the catalog cap this indexes the enumerated batch. Above it, a
/// labelled DFA with uniform transitions, accept bits and start state is
/// drawn until its minimization has k states; each k-state minimal machine
/// has exactly k! labelled representations, so accepted draws are uniform.
inline Dfa random_concept(int k, std::uint64_t seed, const BatchCatalog& catalog = default_catalog(),
                          std::size_t max_attempts = 1'000'000) {
  if (k < 1) throw InputError("batch index k must be >= 1");
  std::mt19937_64 rng(seed);
  if (k <= catalog.cap()) {
    const auto& batch = catalog.batch(k);
    std::uniform_int_distribution<std::size_t> pick(0, batch.count() - 1);
    return batch.concepts[pick(rng)];
  }
  std::uniform_int_distribution<State> state(0, static_cast<State>(k - 1));
  std::bernoulli_distribution coin(0.5);
  Dfa d(static_cast<std::size_t>(k));
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (State q = 0; q < static_cast<State>(k); ++q) {
      d.set_transition(q, 0, state(rng));
      d.set_transition(q, 1, state(rng));
      d.set_accepting(q, coin(rng));
    }
    d.set_start(state(rng));
    if (minimal_size(d) == static_cast<std::size_t>(k)) return minimize(d);
  }
  throw ResourceLimit("random_concept: no minimal " + std::to_string(k) + "-state machine after " +
                      std::to_string(max_attempts) + " attempts");
}

}  // namespace teachkit
