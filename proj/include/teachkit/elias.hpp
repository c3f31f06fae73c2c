#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "teachkit/error.hpp"

namespace teachkit {

/// Elias gamma codeword for n >= 1: floor(log2 n) zeros, then n in binary
/// (which starts with a 1). Length 2*floor(log2 n) + 1.
inline std::string elias_encode(std::uint64_t n) {
  if (n == 0) throw InputError("Elias gamma encodes positive integers only");
  const int width = std::bit_width(n);
  std::string out(static_cast<std::size_t>(width - 1), '0');
  for (int i = width - 1; i >= 0; --i) out.push_back(((n >> i) & 1u) ? '1' : '0');
  return out;
}

struct EliasDecoded {
  std::uint64_t value = 0;
  std::size_t consumed = 0;
};

/// Decodes the codeword starting at `pos`. Throws InputError on an all-zero
/// or truncated prefix.
inline EliasDecoded elias_decode(std::string_view bits, std::size_t pos = 0) {
  std::size_t zeros = 0;
  while (pos + zeros < bits.size() && bits[pos + zeros] == '0') ++zeros;
  if (pos + zeros >= bits.size()) throw InputError("Elias gamma: no terminating 1 in prefix");
  if (zeros > 63) throw InputError("Elias gamma: codeword exceeds 64 bits");
  if (pos + 2 * zeros + 1 > bits.size()) throw InputError("Elias gamma: truncated codeword");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i <= zeros; ++i) {
    const char ch = bits[pos + zeros + i];
    if (ch != '0' && ch != '1') throw InputError("Elias gamma: non-binary character");
    value = (value << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return {value, 2 * zeros + 1};
}

/// Batch-size convention for the series below.
enum class BatchSizeVariant {
  Half,  ///< N = 2^(i-1), as used in the bound's derivation
  Full,  ///< N = 2^i, the literal number of codewords of length 2i+1
};

/// i-th term of sum_i 2^-(2i+1) * N_i * 2 sqrt(2^(i+1) - 1).
inline long double gamma_series_term(int i, BatchSizeVariant variant) {
  const long double batch = std::ldexp(1.0L, variant == BatchSizeVariant::Half ? i - 1 : i);
  const long double cumulative = std::ldexp(1.0L, i + 1) - 1.0L;
  return std::ldexp(1.0L, -(2 * i + 1)) * batch * 2.0L * std::sqrt(cumulative);
}

/// Term-wise majorant 2^(-(i+1)/2) of the Half variant; its sum is 1 + sqrt(2).
inline long double gamma_series_majorant(int i) { return std::pow(2.0L, -(i + 1) / 2.0L); }

inline long double gamma_series_partial_sum(int i_max, BatchSizeVariant variant) {
  long double total = 0.0L;
  for (int i = 0; i <= i_max; ++i) total += gamma_series_term(i, variant);
  return total;
}

}  // namespace teachkit
