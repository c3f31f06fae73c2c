#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "teachkit/elias.hpp"
#include "teachkit/kt.hpp"

using namespace teachkit;

TEST_CASE("Elias gamma codewords", "[universal]") {
  CHECK(elias_encode(1) == "1");
  CHECK(elias_encode(2) == "010");
  CHECK(elias_encode(3) == "011");
  CHECK(elias_encode(4) == "00100");
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto code = elias_encode(n);
    REQUIRE(code == oracle::gamma(n));
    const auto d = elias_decode(code + "0110");
    REQUIRE(d.value == n);
    REQUIRE(d.consumed == code.size());
  }
  for (int i = 0; i <= 10; ++i) {
    std::size_t with_len = 0;
    for (std::uint64_t n = 1; n < (std::uint64_t{1} << 12); ++n) with_len += elias_encode(n).size() == std::size_t(2 * i + 1);
    CHECK(with_len == (std::size_t{1} << i));
  }
  CHECK_THROWS_AS(elias_decode("000"), InputError);
  CHECK_THROWS_AS(elias_decode("0010"), InputError);
  CHECK_THROWS_AS(elias_decode(""), InputError);
}

TEST_CASE("universal-code series stays under 1 + sqrt 2", "[universal]") {
  CHECK(gamma_series_term(0, BatchSizeVariant::Half) == Catch::Approx(0.5));
  const long double limit = 1 + std::sqrt(2.0L);
  long double previous = 0;
  for (int i = 0; i <= 60; ++i) {
    const auto s = gamma_series_partial_sum(i, BatchSizeVariant::Half);
    CHECK(s >= previous);
    CHECK(s <= limit);
    CHECK(gamma_series_term(i, BatchSizeVariant::Half) <= gamma_series_majorant(i));
    CHECK(gamma_series_term(i, BatchSizeVariant::Full) == Catch::Approx(2 * gamma_series_term(i, BatchSizeVariant::Half)));
    previous = s;
  }
  long double majorant = 0;
  for (int i = 0; i <= 200; ++i) majorant += gamma_series_majorant(i);
  CHECK(static_cast<double>(majorant) == Catch::Approx(static_cast<double>(limit)).epsilon(1e-12));
}

TEST_CASE("tiny programs decode, disassemble and run", "[universal]") {
  const auto p = TinyProgram::decode("101011111110");
  REQUIRE(p.code().size() == 3);
  CHECK(p.disassemble() == "0 BR1 2\n1 REJECT\n2 ACCEPT\n");
  CHECK(TinyProgram::assemble(p.code()).bits() == p.bits());
  CHECK(run_tiny(p, BinaryString::parse("10"), 100).halt == Halt::Accept);
  CHECK(run_tiny(p, BinaryString::parse("01"), 100).halt == Halt::Reject);
  CHECK(run_tiny(p, BinaryString::parse("eps"), 100).halt == Halt::Reject);
  // 0: BR0 0 loops forever on a 0.
  const auto loop = TinyProgram::assemble({{Opcode::Br0, 0}, {Opcode::Accept, 0}});
  const auto r = run_tiny(loop, BinaryString::parse("0"), 50);
  CHECK(r.halt == Halt::Timeout);
  CHECK(r.steps == 50);
  CHECK(run_tiny(loop, BinaryString::parse("1"), 50).halt == Halt::Accept);
  // WR1 then BR1 jumps to ACCEPT, even on an empty tape.
  const auto write = TinyProgram::assemble({{Opcode::Wr1, 0}, {Opcode::Br1, 3}, {Opcode::Reject, 0}, {Opcode::Accept, 0}});
  CHECK(run_tiny(write, {}, 10).halt == Halt::Accept);
  CHECK_THROWS_AS(TinyProgram::decode("1101"), InputError);
  CHECK_THROWS_AS(TinyProgram::decode("11"), InputError);
  CHECK_THROWS_AS(TinyProgram::decode("000"), InputError);
}

TEST_CASE("valid programs form a prefix-free set", "[universal]") {
  std::set<std::string> valid;
  for (int len = 1; len <= 18; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string w;
      for (int i = len - 1; i >= 0; --i) w.push_back(((v >> i) & 1) ? '1' : '0');
      if (TinyProgram::try_decode(w)) valid.insert(w);
    }
  REQUIRE_FALSE(valid.empty());
  for (const auto& w : valid) {
    for (std::size_t cut = 1; cut < w.size(); ++cut) REQUIRE_FALSE(valid.count(w.substr(0, cut)));
  }
  std::size_t listed = 0;
  for (std::size_t len = 1; len <= 18; ++len) {
    const auto progs = programs_of_length(len);
    listed += progs.size();
    for (std::size_t i = 1; i < progs.size(); ++i) CHECK(progs[i - 1].bits() < progs[i].bits());
  }
  CHECK(listed == valid.size());
  // Kraft inequality for a prefix-free code.
  double kraft = 0;
  for (const auto& w : valid) kraft += std::ldexp(1.0, -static_cast<int>(w.size()));
  CHECK(kraft <= 1.0);
}

TEST_CASE("Kt learner on small samples", "[universal]") {
  const auto starts1 = parse_examples("+ 1\n+ 10\n+ 11\n- 0\n- eps\n- 01\n");
  const auto r = kt_learn(starts1, 20);
  REQUIRE(r.found);
  CHECK(r.budget <= 20);
  for (const auto& [w, label] : starts1) CHECK((run_tiny(*r.program, w, 1u << 20).halt == Halt::Accept) == label);
  CHECK(static_cast<long double>(r.executed_steps) <= kt_step_bound(20));
  CHECK(r.kt == Catch::Approx(r.program->length() + std::log2(static_cast<double>(r.total_steps))));

  const auto empty = kt_learn({}, 10);
  REQUIRE(empty.found);
  CHECK(empty.program->bits() == "110");
  CHECK_FALSE(kt_learn(starts1, 8).found);
}

TEST_CASE("Kt learner is budget monotone", "[universal]") {
  std::mt19937_64 rng(31);
  const auto pool = strings_up_to(2);
  for (int trial = 0; trial < 50; ++trial) {
    ExampleSet s;
    for (const auto& w : pool)
      if (rng() % 3 == 0) s.insert(w, rng() & 1);
    std::optional<std::string> first;
    int first_budget = 0;
    for (int b = 4; b <= 14; ++b) {
      const auto r = kt_learn(s, b);
      if (first) {
        REQUIRE(r.found);
        CHECK(r.program->bits() == *first);
        CHECK(r.budget == first_budget);
      } else if (r.found) {
        first = r.program->bits();
        first_budget = r.budget;
      }
    }
  }
}

TEST_CASE("bounded Kt teacher", "[universal]") {
  const auto accept = kt_teach(Dfa::all_strings(), 2, 12, 2);
  REQUIRE(accept.found);
  CHECK(accept.uncertified);
  CHECK(accept.teaching.dimension == 0);
  CHECK(accept.program->bits() == "110");
  const auto reject = kt_teach(Dfa::no_strings(), 2, 12, 2);
  REQUIRE(reject.found);
  CHECK(reject.teaching.dimension == 1);
  CHECK(reject.program->bits() == "111");
}
