#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "teachkit/error.hpp"

namespace teachkit {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("bad number '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw InputError("bad number '" + std::string(whole) + "'");
    if (v > (INT64_MAX - 9) / 10) throw InputError("number too large '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace detail

// Accepts "p/q", "n", or a plain decimal "0.05" (kept exact as 5/100).
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto den = detail::parse_int(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    out = Rational(detail::parse_int(s.substr(0, slash), text), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (frac.size() > 15) throw InputError("too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t int_part = whole.empty() ? 0 : detail::parse_int(whole, text);
    const std::int64_t frac_part = frac.empty() ? 0 : detail::parse_int(frac, text);
    out = Rational(int_part * scale + frac_part, scale);
  } else {
    out = Rational(detail::parse_int(s, text));
  }
  return negative ? -out : out;
}

}  // namespace teachkit
