#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"
#include "teachkit/dfa_io.hpp"
#include "teachkit/enumeration.hpp"
#include "teachkit/minimize.hpp"

using namespace teachkit;

TEST_CASE("batch sizes match a brute-force language count", "[enumeration]") {
  for (int k = 1; k <= 3; ++k) {
    INFO("k=" << k);
    CHECK(default_catalog().batch(k).count() == oracle::languages_with_size(static_cast<std::size_t>(k)));
  }
  CHECK(count_up_to(3) == 2 + 24 + 1028);
}

TEST_CASE("every enumerated concept is canonical, distinct and sorted", "[enumeration]") {
  for (int k = 1; k <= 3; ++k) {
    const auto& batch = default_catalog().batch(k);
    std::set<std::vector<bool>> languages;
    for (std::size_t i = 0; i < batch.count(); ++i) {
      const auto& d = batch.concepts[i];
      REQUIRE(d.num_states() == static_cast<std::size_t>(k));
      REQUIRE(is_canonical(d));
      languages.insert(oracle::signature(d, 2 * k));
      if (i) REQUIRE(key_less(batch.concepts[i - 1], d));
    }
    CHECK(languages.size() == batch.count());
  }
}

TEST_CASE("enumeration is deterministic and respects the cap", "[enumeration]") {
  const auto a = enumerate_batch(3);
  const auto b = enumerate_batch(3);
  REQUIRE(a.count() == b.count());
  for (std::size_t i = 0; i < a.count(); ++i) CHECK(format_dfa(a.concepts[i]) == format_dfa(b.concepts[i]));
  CHECK_THROWS_AS(enumerate_batch(4, 3), ResourceLimit);
  CHECK_THROWS_AS(enumerate_batch(0), InputError);
}

TEST_CASE("random_concept is reproducible and lands in the batch", "[enumeration]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_concept(3, seed);
    CHECK(format_dfa(a) == format_dfa(random_concept(3, seed)));
    CHECK(is_canonical(a));
    CHECK(a.num_states() == 3);
  }
  // Above the cap: rejection sampling, still canonical with exactly k states.
  const BatchCatalog small(2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto d = random_concept(5, seed, small);
    CHECK(d.num_states() == 5);
    CHECK(is_canonical(d));
  }
}

TEST_CASE("random_concept is uniform over C_2 (chi-square)", "[enumeration]") {
  const auto& batch = default_catalog().batch(2);
  std::map<std::string, int> hits;
  for (const auto& d : batch.concepts) hits[format_dfa(d)] = 0;
  const int draws = 24000;
  for (int i = 0; i < draws; ++i) ++hits.at(format_dfa(random_concept(2, static_cast<std::uint64_t>(i))));
  const double expected = static_cast<double>(draws) / static_cast<double>(batch.count());
  double chi2 = 0;
  for (const auto& [key, n] : hits) chi2 += (n - expected) * (n - expected) / expected;
  // 23 degrees of freedom; the 0.999 quantile is 49.7.
  CHECK(chi2 < 49.7);
}
