#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "teachkit/rational.hpp"
#include "teachkit/sampling.hpp"
#include "teachkit/text_io.hpp"

namespace teachkit {

// Distribution spec files:
//
//   dist geometric r=<real>          V_k = ((3r+1)/r)(4+1/r)^-k
//   dist geometric p=<rational>      V_k = p (1-p)^(k-1)
//
//   dist custom
//   batch <k> <num>/<den>            one line per listed batch
//   tail geometric <ratio> from <k_s>
inline BatchDistribution parse_distribution(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("distribution: empty file");
  const auto head = split_words(lines[0].second);
  if (head.size() < 2 || head[0] != "dist") throw InputError("distribution: first line must start with 'dist'");

  if (head[1] == "geometric") {
    if (head.size() != 3 || lines.size() != 1)
      throw InputError("distribution: expected a single 'dist geometric r=<real>' or 'p=<rational>' line");
    const std::string& param = head[2];
    if (param.rfind("r=", 0) == 0) {
      double r = 0;
      try {
        std::size_t used = 0;
        r = std::stod(param.substr(2), &used);
        if (used != param.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("distribution: bad r value '" + param + "'");
      }
      return BatchDistribution::geometric_r(r);
    }
    if (param.rfind("p=", 0) == 0) return BatchDistribution::geometric_p(parse_rational(param.substr(2)));
    throw InputError("distribution: expected r=<real> or p=<rational>, got '" + param + "'");
  }

  if (head[1] != "custom" || head.size() != 2) throw InputError("distribution: unknown kind '" + head[1] + "'");
  std::map<int, Rational> table;
  std::optional<Rational> ratio;
  int tail_start = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = split_words(lines[i].second);
    auto fail = [n = lines[i].first](const std::string& msg) {
      return InputError("distribution line " + std::to_string(n) + ": " + msg);
    };
    if (words[0] == "batch") {
      if (words.size() != 3) throw fail("expected 'batch <k> <num>/<den>'");
      const auto k = parse_integer(words[1], "batch index");
      if (k < 1 || k > 64) throw fail("batch index out of range");
      if (!table.emplace(static_cast<int>(k), parse_rational(words[2])).second) throw fail("duplicate batch");
    } else if (words[0] == "tail") {
      if (words.size() != 5 || words[1] != "geometric" || words[3] != "from")
        throw fail("expected 'tail geometric <ratio> from <k_s>'");
      if (ratio) throw fail("duplicate tail line");
      ratio = parse_rational(words[2]);
      const auto ks = parse_integer(words[4], "tail start");
      if (ks < 1 || ks > 64) throw fail("tail start out of range");
      tail_start = static_cast<int>(ks);
    } else {
      throw fail("unknown keyword '" + words[0] + "'");
    }
  }
  return BatchDistribution::custom(table, ratio, tail_start);
}

inline BatchDistribution load_distribution(const std::string& path) { return parse_distribution(read_file(path)); }

}  // namespace teachkit
