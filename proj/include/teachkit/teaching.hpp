#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teachkit/binary_string.hpp"
#include "teachkit/dfa.hpp"
#include "teachkit/enumeration.hpp"
#include "teachkit/example_set.hpp"
#include "teachkit/minimize.hpp"
#include "teachkit/witness_search.hpp"

namespace teachkit {

/// c |= S: d labels every example in S correctly. Everything satisfies {}.
inline bool consistent(const Dfa& d, const ExampleSet& examples) {
  for (const auto& [s, positive] : examples)
    if (run(d, s) != positive) return false;
  return true;
}

/// What the complexity-biased learner concludes from an example set.
///
/// The learner prefers fewer states; concepts with the same state count tie.
/// IDENTIFIED means the bias-maximal consistent set is a singleton.
struct LearnOutcome {
  enum class Tag { Identified, Ambiguous, NoneConsistent };

  Tag tag = Tag::NoneConsistent;
  std::optional<Dfa> concept_dfa;  ///< when Identified
  std::vector<Dfa> candidates;     ///< when Ambiguous: every consistent concept at the minimal k
  int k = 0;                       ///< batch where the scan stopped (0 if none)
};

inline const char* to_string(LearnOutcome::Tag tag) {
  switch (tag) {
    case LearnOutcome::Tag::Identified: return "IDENTIFIED";
    case LearnOutcome::Tag::Ambiguous: return "AMBIGUOUS";
    case LearnOutcome::Tag::NoneConsistent: return "NONE_CONSISTENT";
  }
  return "?";
}

inline LearnOutcome learn(const ExampleSet& examples, int k_max, const BatchCatalog& catalog = default_catalog()) {
  LearnOutcome out;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Dfa> hits;
    for (const auto& c : catalog.batch(k).concepts)
      if (consistent(c, examples)) hits.push_back(c);
    if (hits.empty()) continue;
    out.k = k;
    if (hits.size() == 1) {
      out.tag = LearnOutcome::Tag::Identified;
      out.concept_dfa = std::move(hits.front());
    } else {
      out.tag = LearnOutcome::Tag::Ambiguous;
      out.candidates = std::move(hits);
    }
    return out;
  }
  return out;
}

struct BtdOptions {
  int pool_max_len = -1;     ///< strings of length <= this form the pool; -1 means 2k-2
  std::size_t size_cap = 8;  ///< largest witness size searched exactly
};

/// A teaching set for one target.
struct TeachingResult {
  ExampleSet witness;
  std::size_t dimension = 0;  ///< |witness|
  bool exact = false;         ///< minimum over the pool (false: greedy upper bound)
  int pool_max_len = 0;
};

inline int resolved_pool(const BtdOptions& options, std::size_t k) {
  return options.pool_max_len >= 0 ? options.pool_max_len : static_cast<int>(2 * k) - 2;
}

/// Biased teaching dimension of a canonical concept c with k states.
///
/// Finds the smallest example set drawn from the strings of length <=
/// pool_max_len (labelled by c) that leaves c as the only consistent concept
/// among batches 1..k; higher batches have strictly lower bias and never tie.
/// Equal-size witnesses are ordered by their shortlex-sorted instance lists.
///
/// Throws NoWitness when the pool cannot separate c from some competitor.
inline TeachingResult btd(const Dfa& c, const BtdOptions& options = {},
                          const BatchCatalog& catalog = default_catalog()) {
  if (!is_canonical(c)) throw InputError("btd requires a canonical minimal DFA (see minimize)");
  const auto k = static_cast<int>(c.num_states());
  const int pool_len = resolved_pool(options, c.num_states());
  const auto pool = strings_up_to(pool_len);

  std::vector<const Dfa*> competitors;
  for (int j = 1; j <= k; ++j)
    for (const auto& d : catalog.batch(j).concepts)
      if (!(d == c)) competitors.push_back(&d);

  std::vector<Bitset> eliminates(pool.size(), Bitset(competitors.size()));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const bool label = run(c, pool[i]);
    for (std::size_t j = 0; j < competitors.size(); ++j)
      if (run(*competitors[j], pool[i]) != label) eliminates[i].set(j);
  }

  const auto cover = minimum_cover(eliminates, competitors.size(), options.size_cap);
  if (!cover)
    throw NoWitness("no example set over strings of length <= " + std::to_string(pool_len) +
                    " identifies the target");
  TeachingResult out;
  for (auto i : cover->chosen) out.witness.insert(pool[i], run(c, pool[i]));
  out.dimension = out.witness.size();
  out.exact = cover->exact;
  out.pool_max_len = pool_len;
  return out;
}

/// btd() for every member of C_k, in batch order.
inline std::vector<TeachingResult> btd_batch(int k, const BtdOptions& options = {},
                                             const BatchCatalog& catalog = default_catalog()) {
  std::vector<TeachingResult> out;
  const auto& batch = catalog.batch(k);
  out.reserve(batch.count());
  for (const auto& c : batch.concepts) out.push_back(btd(c, options, catalog));
  return out;
}

struct BatchBtdSummary {
  int k = 0;
  std::size_t count = 0;
  std::size_t total = 0;
  std::size_t max = 0;
  bool all_exact = true;

  double mean() const { return count ? static_cast<double>(total) / static_cast<double>(count) : 0.0; }
};

inline BatchBtdSummary summarize(int k, const std::vector<TeachingResult>& results) {
  BatchBtdSummary s;
  s.k = k;
  s.count = results.size();
  for (const auto& r : results) {
    s.total += r.dimension;
    s.max = std::max(s.max, r.dimension);
    s.all_exact = s.all_exact && r.exact;
  }
  return s;
}

}  // namespace teachkit
