#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "teachkit/dist_io.hpp"
#include "teachkit/sampling.hpp"

using namespace teachkit;

namespace {

const BtdBoundProfile kPow4{BtdBoundProfile::Kind::HalfPow4};
const BtdBoundProfile kSquare{BtdBoundProfile::Kind::Square};

// Direct term-by-term summation in long double.
long double brute_sum(const BatchDistribution& V, const BtdBoundProfile& D, int terms) {
  long double total = 0;
  for (int k = 1; k <= terms; ++k) total += static_cast<long double>(V.mass(k)) * D(k);
  return total;
}

}  // namespace

TEST_CASE("distributions normalize", "[sampling]") {
  for (double r : {0.5, 1.0, 2.0, 10.0}) {
    const auto V = BatchDistribution::geometric_r(r);
    double total = 0;
    for (int k = 1; k <= 2000; ++k) total += V.mass(k);
    CHECK(total == Catch::Approx(1.0).margin(1e-9));
    CHECK(V.mass(1) == Catch::Approx((3 * r + 1) / r / (4 + 1 / r)));
  }
  const auto P = BatchDistribution::geometric_p(Rational(1, 6));
  CHECK(*P.exact_mass(3) == Rational(25, 216));
  const auto C = BatchDistribution::three_batch_custom();
  CHECK(*C.exact_mass(2) == Rational(8, 13));
  // The listed masses sum to 12/13; the tail 14^-(k-3) supplies the rest.
  CHECK(*C.exact_mass(4) == Rational(1, 14));
  CHECK(*C.exact_mass(5) == Rational(1, 196));
  CHECK_THROWS_AS(BatchDistribution::custom({{1, Rational(1, 2)}}, std::nullopt, 2), InputError);
  CHECK_THROWS_AS(BatchDistribution::custom({{1, Rational(1, 2)}}, Rational(1, 3), 2), InputError);
  CHECK_THROWS_AS(BatchDistribution::geometric_r(-1), InputError);
}

TEST_CASE("distribution text format", "[sampling][io]") {
  const auto V = parse_distribution("dist custom\nbatch 1 1/13\nbatch 2 8/13\nbatch 3 3/13\ntail geometric 1/14 from 4\n");
  CHECK(*V.exact_mass(3) == Rational(3, 13));
  CHECK(parse_distribution("dist geometric r=2").mass(1) == Catch::Approx(7.0 / 2 / 4.5));
  CHECK(*parse_distribution("dist geometric p=1/6").exact_mass(1) == Rational(1, 6));
  CHECK_THROWS_AS(parse_distribution("dist custom\nbatch 1 1/2\n"), InputError);
  CHECK_THROWS_AS(parse_distribution("dist poisson 3\n"), InputError);
  CHECK_THROWS_AS(parse_distribution("dist custom\nbatch 0 1\n"), InputError);
  CHECK_THROWS_AS(parse_distribution("dist geometric r=abc\n"), InputError);
}

TEST_CASE("closed-form bounds agree with direct summation", "[sampling]") {
  for (double r : {1.0, 2.0, 10.0}) {
    const auto V = BatchDistribution::geometric_r(r);
    const auto b = expected_btd_bound(V, kPow4);
    REQUIRE_FALSE(b.diverges);
    CHECK(b.value == Catch::Approx(2 * (3 * r + 1)).margin(1e-9));
    // Terms shrink by 4/(4+1/r) per step; r=10 needs too many terms for doubles.
    if (r <= 2) CHECK(static_cast<double>(brute_sum(V, kPow4, 480)) == Catch::Approx(b.value).epsilon(1e-9));
  }
  CHECK(expected_btd_bound(BatchDistribution::geometric_r(0.25), kPow4).diverges == false);
  const auto square = expected_btd_bound(BatchDistribution::geometric_p(Rational(1, 6)), kSquare);
  CHECK(square.value == Catch::Approx(66.0).margin(1e-6));
  CHECK(square.exact == Rational(66));
  CHECK(static_cast<double>(brute_sum(BatchDistribution::geometric_p(Rational(1, 6)), kSquare, 600)) ==
        Catch::Approx(66.0).margin(1e-9));
  // Geometric p with (1-p)*4 >= 1 makes the 2^(2k-1) series diverge.
  CHECK(expected_btd_bound(BatchDistribution::geometric_p(Rational(1, 6)), kPow4).diverges);

  const auto custom = expected_btd_bound(BatchDistribution::three_batch_custom(), kPow4);
  CHECK(custom.exact == Rational(1642, 65));
  CHECK(custom.tail == Catch::Approx(12.8));
  CHECK(static_cast<double>(brute_sum(BatchDistribution::three_batch_custom(), kPow4, 400)) ==
        Catch::Approx(custom.value).epsilon(1e-12));
}

TEST_CASE("partial sums increase toward the closed form", "[sampling]") {
  const auto V = BatchDistribution::geometric_r(2);
  const double limit = expected_btd_bound(V, kPow4).value;
  double previous = 0;
  for (int n = 1; n <= 120; ++n) {
    const double s = partial_sum(V, kPow4, n);
    CHECK(s >= previous);
    CHECK(s <= limit + 1e-9);
    previous = s;
  }
  const auto rows = series_rows(V, kPow4, 10, {2, 24, 1028});
  REQUIRE(rows.size() == 10);
  CHECK(rows[2].count == std::optional<std::size_t>(1028));
  CHECK_FALSE(rows[3].count.has_value());
  CHECK(rows[9].cumulative == Catch::Approx(partial_sum(V, kPow4, 10)));
}

TEST_CASE("monotonicity of per-concept mass", "[sampling]") {
  const std::vector<std::size_t> counts{2, 24, 1028};
  CHECK(validate_monotone(BatchDistribution::geometric_r(1), counts).monotone);
  const auto custom = validate_monotone(BatchDistribution::three_batch_custom(), counts);
  CHECK(custom.monotone);
  CHECK(custom.per_concept[0] == Catch::Approx(1.0 / 26));
  CHECK(custom.per_concept[1] == Catch::Approx(8.0 / 13 / 24));
  CHECK(custom.per_concept[2] == Catch::Approx(3.0 / 13 / 1028));
  const auto spike = BatchDistribution::custom({{1, Rational(0)}, {2, Rational(0)}, {3, Rational(1)}}, std::nullopt, 4);
  const auto bad = validate_monotone(spike, counts);
  CHECK_FALSE(bad.monotone);
  REQUIRE(bad.first_violation);
  CHECK(bad.first_violation->k == 2);
}

TEST_CASE("enumerated expectation stays below the bound", "[sampling]") {
  const auto V = BatchDistribution::three_batch_custom();
  const auto e = expected_btd_exact(V, 2, kPow4);
  CHECK(e.exact);
  const double by_hand = 1.0 / 13 * 1 + 8.0 / 13 * (82.0 / 24);
  CHECK(e.exact_part == Catch::Approx(by_hand));
  CHECK(e.total() <= expected_btd_bound(V, kPow4).value);
}

TEST_CASE("inverse-CDF sampling follows the masses", "[sampling]") {
  const auto V = BatchDistribution::geometric_r(1);
  std::vector<int> hits(40, 0);
  const int n = 200000;
  for (int i = 0; i < n; ++i) ++hits[std::min(V.sample_batch((i + 0.5) / n), 39)];
  for (int k = 1; k <= 6; ++k) CHECK(hits[k] / static_cast<double>(n) == Catch::Approx(V.mass(k)).margin(2e-5));
}

TEST_CASE("Monte Carlo estimate is deterministic and agrees with the enumeration", "[sampling]") {
  const auto V = BatchDistribution::custom({{1, Rational(1, 4)}, {2, Rational(3, 4)}}, std::nullopt, 3);
  const auto a = expected_btd_mc(V, 1500, 7, 3, kPow4);
  const auto b = expected_btd_mc(V, 1500, 7, 3, kPow4);
  CHECK(a.mean == b.mean);
  CHECK(a.bounded == 0);
  const auto e = expected_btd_exact(V, 2, kPow4);
  CHECK(std::abs(a.mean - e.exact_part) <= 3 * a.std_error);
  CHECK(expected_btd_mc(V, 1500, 8, 3, kPow4).mean != a.mean);
}
