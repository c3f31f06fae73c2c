#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "teachkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = teachkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TEACHKIT_DATA_DIR) + "/" + name; }

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("help documents every file format", "[cli]") {
  const auto r = cli({"--help"});
  CHECK(r.code == 0);
  for (const char* piece : {"dfa 1", "dist custom", "instances", "+ 1", "tail geometric", "Exit status"})
    CHECK(has(r.out, piece));
}

TEST_CASE("usage errors exit 2", "[cli]") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"count", "--bogus"}).code == 2);
  CHECK(cli({"btd", "--dfa", "/nonexistent.dfa"}).code == 2);
}

TEST_CASE("reports carry a header with version and configuration", "[cli]") {
  const auto r = cli({"count", "--k-max", "3", "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "# teachkit 0.1.0"));
  CHECK(has(r.out, "k-max=3"));
  CHECK(has(r.out, "seed=5"));
  CHECK(has(r.out, "3 1028"));
  CHECK(has(cli({"count", "--k-max", "2", "--csv"}).out, "2,24"));
}

TEST_CASE("resource limits exit 3 and missing results exit 4", "[cli]") {
  CHECK(cli({"enumerate", "--k", "5"}).code == 3);
  CHECK(cli({"kt-learn", "--examples", data("starts-with-1.examples"), "--budget", "6"}).code == 4);
}

TEST_CASE("automata subcommands", "[cli]") {
  const auto r = cli({"distinguish", data("tight-pairs/k4_a.dfa"), data("tight-pairs/k4_b.dfa")});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "\n000111\n"));
  CHECK(has(cli({"equiv", data("tight-pairs/k4_a.dfa"), data("tight-pairs/k4_a.dfa")}).out, "equivalent"));
  CHECK(has(cli({"minimize", data("tight-pairs/k3_b.dfa")}).out, "states 3 -> 3"));
}

TEST_CASE("teach writes a witness the learner accepts", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "teachkit_cli_test";
  std::filesystem::create_directories(dir);
  const auto witness = (dir / "w.examples").string();
  const auto r = cli({"teach", "--dfa", data("tight-pairs/k2_a.dfa"), "--out", witness});
  REQUIRE(r.code == 0);
  const auto learned = cli({"learn", "--examples", witness, "--k-max", "3"});
  REQUIRE(learned.code == 0);
  CHECK(has(learned.out, "IDENTIFIED"));
}

TEST_CASE("tabular and sampling subcommands", "[cli]") {
  const auto post = cli({"posterior", "--class", data("seven-instance.class"), "--examples", data("seven-instance.examples")});
  REQUIRE(post.code == 0);
  CHECK(has(post.out, "9/20"));
  CHECK(has(post.out, "0.7143"));
  const auto b = cli({"btd-tabular", "--class", data("seven-instance.class"), "--target", "c4", "--csv"});
  CHECK(has(b.out, "c4,2,"));
  CHECK(has(cli({"series", "--which", "square"}).out, "= 66"));
  CHECK(has(cli({"series", "--which", "fig12"}).out, "= 66"));
  CHECK(has(cli({"series", "--which", "bound", "--terms", "5"}).out, "= 1642/65"));
  CHECK(has(cli({"series", "--which", "gamma", "--terms", "3"}).out, "limit 1+sqrt(2)"));
  CHECK(cli({"series", "--which", "nope"}).code == 2);
  CHECK(has(cli({"expected-btd", "--dist", data("geometric-r1.dist"), "--exact-k", "0"}).out, "8.000000"));
  CHECK(has(cli({"validate-dist", "--dist", data("three-batch.dist"), "--k-max", "3"}).out, "monotone yes"));
  const auto a = cli({"mc-expected-btd", "--dist", data("three-batch.dist"), "--samples", "200", "--k-cap", "2"});
  const auto c = cli({"mc-expected-btd", "--dist", data("three-batch.dist"), "--samples", "200", "--k-cap", "2"});
  CHECK(a.out == c.out);
}

TEST_CASE("universal subcommands", "[cli]") {
  CHECK(has(cli({"elias", "encode", "4"}).out, "4 00100"));
  CHECK(has(cli({"elias", "decode", "1010011"}).out, "011 3"));
  CHECK(cli({"elias", "decode", "001"}).code == 2);
  CHECK(has(cli({"disasm", "101011111110"}).out, "0 BR1 2"));
  CHECK(has(cli({"run-tiny", "--program", "101011111110", "--input", "1", "--trace"}).out, "ACCEPT steps=2"));
  const auto kt = cli({"kt-learn", "--examples", data("starts-with-1.examples"), "--budget", "20"});
  REQUIRE(kt.code == 0);
  CHECK(has(kt.out, "FOUND 101011111110"));
}
