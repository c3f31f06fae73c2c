#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "teachkit/enumeration.hpp"
#include "teachkit/error.hpp"
#include "teachkit/minimize.hpp"
#include "teachkit/rational.hpp"
#include "teachkit/teaching.hpp"

namespace teachkit {

/// Per-batch sampling masses V_k.
///
/// Every kind is stored the same way: an explicit head V_1..V_h plus a
/// geometric tail V_k = tail_scale * tail_ratio^(k - tail_start) for
/// k >= tail_start (> h). Entries between the head and the tail are 0.
/// Exact rationals are kept alongside whenever the inputs were rational.
class BatchDistribution {
 public:
  enum class Kind { GeometricR, GeometricP, Custom };

  /// V_k = ((3r+1)/r) (4+1/r)^-k, r > 0.
  static BatchDistribution geometric_r(double r) {
    if (!(r > 0) || !std::isfinite(r)) throw InputError("geometric r must be a positive real");
    BatchDistribution d;
    d.kind_ = Kind::GeometricR;
    d.param_ = r;
    d.tail_start_ = 1;
    d.tail_scale_ = (3 * r + 1) / (4 * r + 1);
    d.tail_ratio_ = r / (4 * r + 1);
    d.check_normalized();
    return d;
  }

  /// V_k = p (1-p)^(k-1), 0 < p <= 1.
  static BatchDistribution geometric_p(const Rational& p) {
    if (p <= Rational(0) || p > Rational(1)) throw InputError("geometric p must lie in (0,1]");
    BatchDistribution d;
    d.kind_ = Kind::GeometricP;
    d.param_ = to_double(p);
    d.tail_start_ = 1;
    d.exact_tail_scale_ = p;
    d.exact_tail_ratio_ = Rational(1) - p;
    d.tail_scale_ = to_double(p);
    d.tail_ratio_ = to_double(Rational(1) - p);
    d.check_normalized();
    return d;
  }

  /// Explicit V_k for listed k, then an optional geometric tail from
  /// tail_start whose scale is fixed so the masses sum to 1. The tail ratio
  /// must be below 1/4 so the series against D_k = 2^(2k-1) converges.
  static BatchDistribution custom(const std::map<int, Rational>& table, std::optional<Rational> tail_ratio,
                                  int tail_start) {
    BatchDistribution d;
    d.kind_ = Kind::Custom;
    Rational head_sum(0);
    int h = 0;
    for (const auto& [k, v] : table) {
      if (k < 1) throw InputError("batch index must be >= 1");
      if (v < Rational(0)) throw InputError("batch mass must be non-negative");
      head_sum += v;
      h = std::max(h, k);
    }
    d.head_.assign(h, 0.0);
    d.exact_head_.assign(h, Rational(0));
    for (const auto& [k, v] : table) {
      d.exact_head_[k - 1] = v;
      d.head_[k - 1] = to_double(v);
    }
    if (head_sum > Rational(1)) throw InputError("batch masses exceed 1 (sum " + to_string(head_sum) + ")");
    if (tail_ratio) {
      if (*tail_ratio < Rational(0) || *tail_ratio >= Rational(1, 4))
        throw InputError("tail ratio " + to_string(*tail_ratio) + " must lie in [0, 1/4)");
      if (tail_start <= h) throw InputError("tail must start after the last listed batch");
      d.tail_start_ = tail_start;
      d.exact_tail_ratio_ = *tail_ratio;
      d.exact_tail_scale_ = (Rational(1) - head_sum) * (Rational(1) - *tail_ratio);
      d.tail_ratio_ = to_double(*tail_ratio);
      d.tail_scale_ = to_double(*d.exact_tail_scale_);
    } else {
      d.tail_start_ = h + 1;
      d.exact_tail_ratio_ = Rational(0);
      d.exact_tail_scale_ = Rational(0);
    }
    d.check_normalized();
    return d;
  }

  /// V_1=1/13, V_2=8/13, V_3=3/13, V_k = 14^-(k-3) for k > 3.
  static BatchDistribution three_batch_custom() {
    return custom({{1, Rational(1, 13)}, {2, Rational(8, 13)}, {3, Rational(3, 13)}}, Rational(1, 14), 4);
  }

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  int head_size() const { return static_cast<int>(head_.size()); }
  int tail_start() const { return tail_start_; }
  double tail_scale() const { return tail_scale_; }
  double tail_ratio() const { return tail_ratio_; }
  bool is_exact() const { return exact_tail_ratio_.has_value(); }
  std::optional<Rational> exact_tail_ratio() const { return exact_tail_ratio_; }

  double mass(int k) const {
    if (k < 1) return 0.0;
    if (k <= head_size()) return head_[k - 1];
    if (k < tail_start_) return 0.0;
    return tail_scale_ * std::pow(tail_ratio_, k - tail_start_);
  }

  std::optional<Rational> exact_mass(int k) const {
    if (!is_exact()) return std::nullopt;
    if (k < 1) return Rational(0);
    if (k <= head_size()) return exact_head_[k - 1];
    if (k < tail_start_) return Rational(0);
    Rational v = *exact_tail_scale_;
    for (int j = tail_start_; j < k; ++j) v *= *exact_tail_ratio_;
    return v;
  }

  /// Sum of V_k over all k >= from, in closed form.
  double mass_from(int from) const {
    double total = 0.0;
    for (int k = std::max(from, 1); k <= head_size(); ++k) total += head_[k - 1];
    const int t = std::max(from, tail_start_);
    if (tail_scale_ > 0) total += tail_scale_ * std::pow(tail_ratio_, t - tail_start_) / (1.0 - tail_ratio_);
    return total;
  }

  /// Inverse CDF; u in [0,1). Geometric tail inverted in closed form.
  int sample_batch(double u) const {
    double acc = 0.0;
    for (int k = 1; k <= head_size(); ++k) {
      acc += head_[k - 1];
      if (u < acc) return k;
    }
    if (tail_scale_ <= 0) return std::max(head_size(), 1);
    const double tail_mass = tail_scale_ / (1.0 - tail_ratio_);
    const double w = std::clamp((u - acc) / tail_mass, 0.0, 1.0 - 1e-16);
    if (tail_ratio_ <= 0) return tail_start_;
    return tail_start_ + static_cast<int>(std::floor(std::log1p(-w) / std::log(tail_ratio_)));
  }

  /// Textual description for report headers.
  std::string describe() const {
    switch (kind_) {
      case Kind::GeometricR: return "geometric r=" + format_real(param_);
      case Kind::GeometricP: return "geometric p=" + to_string(*exact_tail_scale_);
      case Kind::Custom: {
        std::string s = "custom";
        for (int k = 1; k <= head_size(); ++k)
          if (exact_head_[k - 1] != Rational(0)) s += " V" + std::to_string(k) + "=" + to_string(exact_head_[k - 1]);
        if (tail_scale_ > 0)
          s += " tail ratio " + to_string(*exact_tail_ratio_) + " from " + std::to_string(tail_start_);
        return s;
      }
    }
    return "?";
  }

  static std::string format_real(double x) {
    std::ostringstream ss;
    ss.precision(12);
    ss << x;
    return ss.str();
  }

 private:
  void check_normalized() const {
    const double total = mass_from(1);
    if (std::abs(total - 1.0) > 1e-9)
      throw InputError("batch masses sum to " + format_real(total) + ", expected 1");
  }

  Kind kind_ = Kind::Custom;
  double param_ = 0.0;
  std::vector<double> head_;
  std::vector<Rational> exact_head_;
  int tail_start_ = 1;
  double tail_scale_ = 0.0;
  double tail_ratio_ = 0.0;
  std::optional<Rational> exact_tail_scale_;
  std::optional<Rational> exact_tail_ratio_;
};

/// Upper bound D_k on the batch-average BTD.
struct BtdBoundProfile {
  enum class Kind { HalfPow4, Square };  ///< D_k = 2^(2k-1), D_k = k^2
  Kind kind = Kind::HalfPow4;

  double operator()(int k) const {
    return kind == Kind::HalfPow4 ? std::ldexp(1.0, 2 * k - 1) : static_cast<double>(k) * k;
  }
  Rational exact(int k) const {
    return kind == Kind::HalfPow4 ? Rational(std::int64_t{1} << (2 * k - 1)) : Rational(std::int64_t{k} * k);
  }
  const char* name() const { return kind == Kind::HalfPow4 ? "2^(2k-1)" : "k^2"; }
};

struct SeriesBound {
  bool diverges = false;
  double value = 0.0;                 ///< sum over all k of V_k D_k
  double head = 0.0;                  ///< listed part
  double tail = 0.0;                  ///< geometric tail, closed form
  std::optional<Rational> exact;      ///< when every input was rational
};

namespace detail {

/// sum_{j>=0} scale * ratio^j * D(start + j), closed form; nullopt if divergent.
inline std::optional<double> geometric_tail(double scale, double ratio, int start, const BtdBoundProfile& D) {
  if (scale == 0) return 0.0;
  if (D.kind == BtdBoundProfile::Kind::HalfPow4) {
    if (4 * ratio >= 1) return std::nullopt;
    return scale * D(start) / (1 - 4 * ratio);
  }
  if (ratio >= 1) return std::nullopt;
  const double s = start, q = 1 - ratio;
  return scale * (s * s / q + 2 * s * ratio / (q * q) + ratio * (1 + ratio) / (q * q * q));
}

inline std::optional<Rational> geometric_tail_exact(const Rational& scale, const Rational& ratio, int start,
                                                    const BtdBoundProfile& D) {
  if (scale == Rational(0)) return Rational(0);
  if (D.kind == BtdBoundProfile::Kind::HalfPow4) {
    if (ratio * 4 >= Rational(1)) return std::nullopt;
    return scale * D.exact(start) / (Rational(1) - 4 * ratio);
  }
  if (ratio >= Rational(1)) return std::nullopt;
  const Rational s(start), q = Rational(1) - ratio;
  return scale * (s * s / q + 2 * s * ratio / (q * q) + ratio * (Rational(1) + ratio) / (q * q * q));
}

}  // namespace detail

/// sum_{k >= from} V_k D_k.
inline SeriesBound series_from(const BatchDistribution& V, const BtdBoundProfile& D, int from) {
  SeriesBound out;
  for (int k = std::max(from, 1); k <= V.head_size(); ++k) out.head += V.mass(k) * D(k);
  const int t = std::max(from, V.tail_start());
  const double scale = V.tail_scale() * std::pow(V.tail_ratio(), t - V.tail_start());
  const auto tail = detail::geometric_tail(scale, V.tail_ratio(), t, D);
  if (!tail) {
    out.diverges = true;
    return out;
  }
  out.tail = *tail;
  out.value = out.head + out.tail;
  if (V.is_exact()) {
    Rational head(0);
    for (int k = std::max(from, 1); k <= V.head_size(); ++k) head += *V.exact_mass(k) * D.exact(k);
    if (auto et = detail::geometric_tail_exact(*V.exact_mass(t), *V.exact_tail_ratio(), t, D))
      out.exact = head + *et;
  }
  return out;
}

/// E_v[BTD] <= sum_k V_k D_k, closed form over the whole series.
inline SeriesBound expected_btd_bound(const BatchDistribution& V, const BtdBoundProfile& D = {}) {
  return series_from(V, D, 1);
}

/// sum_{k=1}^{k_terms} V_k D_k.
inline double partial_sum(const BatchDistribution& V, const BtdBoundProfile& D, int k_terms) {
  double total = 0.0;
  for (int k = 1; k <= k_terms; ++k) total += V.mass(k) * D(k);
  return total;
}

/// One row per batch: the per-batch components of the expected-BTD series.
struct SeriesRow {
  int k = 0;
  double mass = 0.0;                  ///< V_k
  std::optional<std::size_t> count;   ///< N_k when enumerated
  double bound = 0.0;                 ///< D_k
  double product = 0.0;               ///< V_k D_k
  double cumulative = 0.0;
};

inline std::vector<SeriesRow> series_rows(const BatchDistribution& V, const BtdBoundProfile& D, int k_terms,
                                          const std::vector<std::size_t>& counts = {}) {
  std::vector<SeriesRow> rows;
  double cumulative = 0.0;
  for (int k = 1; k <= k_terms; ++k) {
    SeriesRow r;
    r.k = k;
    r.mass = V.mass(k);
    if (static_cast<std::size_t>(k) <= counts.size()) r.count = counts[k - 1];
    r.bound = D(k);
    r.product = r.mass * r.bound;
    cumulative += r.product;
    r.cumulative = cumulative;
    rows.push_back(r);
  }
  return rows;
}

/// Outcome of the per-concept monotonicity check v_k = V_k / N_k.
struct MonotoneReport {
  bool monotone = true;
  int checked_through = 0;
  std::vector<double> per_concept;  ///< v_1..v_checked_through
  struct Violation {
    int k = 0;
    double v_k = 0.0;
    double v_next = 0.0;
  };
  std::optional<Violation> first_violation;  ///< between k and k+1
};

/// Checks v_k = V_k / N_k is non-increasing for the batches with known
/// counts (counts[k-1] = N_k).
inline MonotoneReport validate_monotone(const BatchDistribution& V, const std::vector<std::size_t>& counts) {
  MonotoneReport out;
  out.checked_through = static_cast<int>(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out.per_concept.push_back(V.mass(static_cast<int>(i) + 1) / static_cast<double>(counts[i]));
  for (std::size_t i = 0; i + 1 < out.per_concept.size(); ++i) {
    if (out.per_concept[i + 1] > out.per_concept[i] * (1 + 1e-12)) {
      out.monotone = false;
      out.first_violation = MonotoneReport::Violation{static_cast<int>(i) + 1, out.per_concept[i], out.per_concept[i + 1]};
      break;
    }
  }
  return out;
}

/// Batch counts N_1..N_k from the catalog.
inline std::vector<std::size_t> batch_counts(int k, const BatchCatalog& catalog = default_catalog()) {
  std::vector<std::size_t> out;
  for (int j = 1; j <= k; ++j) out.push_back(catalog.batch(j).count());
  return out;
}

/// Expected BTD with batches 1..k_max enumerated exactly and the remaining
/// batches covered by the D-profile bound.
struct ExactExpectation {
  std::vector<BatchBtdSummary> batches;
  double exact_part = 0.0;  ///< sum_{k<=k_max} V_k * mean BTD(C_k)
  double tail_bound = 0.0;  ///< sum_{k>k_max} V_k D_k
  bool tail_diverges = false;
  bool exact = true;        ///< every btd call proved minimal

  double total() const { return exact_part + tail_bound; }
};

inline ExactExpectation expected_btd_exact(const BatchDistribution& V, int k_max, const BtdBoundProfile& D = {},
                                           const BtdOptions& options = {},
                                           const BatchCatalog& catalog = default_catalog()) {
  if (k_max < 0) throw InputError("k_max must be >= 0");
  ExactExpectation out;
  for (int k = 1; k <= k_max; ++k) {
    auto summary = summarize(k, btd_batch(k, options, catalog));
    out.exact = out.exact && summary.all_exact;
    out.exact_part += V.mass(k) * summary.mean();
    out.batches.push_back(summary);
  }
  const auto tail = series_from(V, D, k_max + 1);
  out.tail_diverges = tail.diverges;
  out.tail_bound = tail.value;
  return out;
}

/// Monte Carlo estimate of E_v[BTD].
struct McEstimate {
  std::size_t samples = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t bounded = 0;  ///< draws above k_cap, counted as D_k
  std::size_t inexact = 0;  ///< draws whose btd was a greedy upper bound
  std::map<int, std::size_t> per_batch;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Draws k ~ V and c ~ uniform(C_k), averages btd(c). Draws with k > k_cap
/// contribute D_k. Sample i uses its own generator seeded from (seed, i), so
/// shards of the index range reproduce the same draws.
inline McEstimate expected_btd_mc(const BatchDistribution& V, std::size_t n, std::uint64_t seed, int k_cap,
                                  const BtdBoundProfile& D = {}, const BtdOptions& options = {},
                                  const BatchCatalog& catalog = default_catalog()) {
  if (n < 1) throw InputError("Monte Carlo needs at least one sample");
  if (k_cap > catalog.cap()) throw ResourceLimit("k_cap exceeds the enumeration cap");
  McEstimate out;
  out.samples = n;
  std::map<CanonicalKey, TeachingResult> cache;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(i)));
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const int k = V.sample_batch(u);
    ++out.per_batch[k];
    double value;
    if (k > k_cap) {
      value = D(k);
      ++out.bounded;
    } else {
      const Dfa c = random_concept(k, rng(), catalog);
      auto key = canonical_key(c);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(std::move(key), btd(c, options, catalog)).first;
      value = static_cast<double>(it->second.dimension);
      if (!it->second.exact) ++out.inexact;
    }
    sum += value;
    sum_sq += value * value;
  }
  const double dn = static_cast<double>(n);
  out.mean = sum / dn;
  const double var = n > 1 ? std::max(0.0, (sum_sq - dn * out.mean * out.mean) / (dn - 1)) : 0.0;
  out.std_error = std::sqrt(var / dn);
  return out;
}

}  // namespace teachkit
