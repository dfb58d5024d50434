#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pairinfo/codec.hpp"
#include "pairinfo/errors.hpp"
#include "pairinfo/info.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/pairing.hpp"

namespace pairinfo {

/// Exhaustive compressibility count over [1, N): how many values the
/// codec squeezes c or more bits below log2(N). The analytic counting
/// bound 2^(1-c) caps the fraction for any injective code; a finite
/// census exhibits the bound, it cannot show the density-zero limit.
struct CensusReport {
  Nat range_size;
  unsigned slack_bits = 0;
  std::uint64_t count_compressible = 0;
  Real fraction = 0.0L;
  Real bound = 0.0L;
};

inline CensusReport census(const Nat& range_size, unsigned slack_bits,
                           const Codec& codec = builtin_codec()) {
  if (range_size < 2) throw domain_error("census: range must be >= 2");
  if (range_size > Nat(std::uint64_t(1) << 32))
    throw domain_error("census: exhaustive range capped at 2^32");
  auto n = static_cast<std::uint64_t>(range_size);

  CensusReport report;
  report.range_size = range_size;
  report.slack_bits = slack_bits;
  Real threshold = info_content(range_size) - static_cast<Real>(slack_bits);
  for (std::uint64_t x = 1; x < n; ++x) {
    if (static_cast<Real>(codec.code_length(Nat(x))) <= threshold)
      ++report.count_compressible;
  }
  report.fraction = static_cast<Real>(report.count_compressible) / static_cast<Real>(n);
  report.bound = std::exp2(1.0L - static_cast<Real>(slack_bits));
  return report;
}

/// Wedge { (x,y) : h*x <= y <= (h+eps)*x } clipped to [0, N]^2.
/// eps = 0 degenerates to the line itself.
struct WedgeSpec {
  Rational h;
  Rational epsilon;
  Nat box_side;

  void validate() const {
    if (h <= 0) throw domain_error("WedgeSpec: slope must be > 0");
    if (epsilon < 0) throw domain_error("WedgeSpec: epsilon must be >= 0");
    if (box_side < 1) throw domain_error("WedgeSpec: box side must be >= 1");
    if (box_side > Nat(std::uint64_t(1) << 32))
      throw domain_error("WedgeSpec: box side capped at 2^32");
  }
};

struct WedgeReport {
  WedgeSpec spec;
  Nat lattice_count;
  Real lattice_fraction = 0.0L;  // count / N^2
  Real area_fraction = 0.0L;     // clipped area of the wedge / N^2
};

namespace detail {

// Area under y = s*x inside [0,N]^2, divided by N^2: s/2 below the
// diagonal, 1 - 1/(2s) above it. Exact rational.
inline Rational clipped_area_fraction(const Rational& s) {
  if (s <= 1) return s / 2;
  return Rational(1) - Rational(1) / (2 * s);
}

}  // namespace detail

/// Count lattice points of the wedge with exact rational comparisons;
/// no floating point touches the membership test.
inline WedgeReport wedge_points(const WedgeSpec& spec) {
  spec.validate();
  WedgeReport report;
  report.spec = spec;

  Nat lo_num = numerator(spec.h), lo_den = denominator(spec.h);
  Rational upper = spec.h + spec.epsilon;
  Nat hi_num = numerator(upper), hi_den = denominator(upper);
  auto n = static_cast<std::uint64_t>(spec.box_side);

  Nat count = 0;
  for (std::uint64_t xi = 0; xi <= n; ++xi) {
    Nat x(xi);
    Nat y_lo = (lo_num * x + lo_den - 1) / lo_den;  // ceil(h x)
    Nat y_hi = (hi_num * x) / hi_den;               // floor((h+eps) x)
    if (y_hi > spec.box_side) y_hi = spec.box_side;
    if (y_lo <= y_hi) count += y_hi - y_lo + 1;
  }
  report.lattice_count = count;

  Real n2 = static_cast<Real>(n) * static_cast<Real>(n);
  report.lattice_fraction = count.convert_to<Real>() / n2;
  Rational area = detail::clipped_area_fraction(upper) -
                  detail::clipped_area_fraction(spec.h);
  report.area_fraction =
      numerator(area).convert_to<Real>() / denominator(area).convert_to<Real>();
  return report;
}

/// Complexity shift under the coordinate-swap bijection
/// y -> pair(swap(unpair(y))): d(y) = codeLen(image) - codeLen(y).
/// The observed maximum is reported, never asserted, as the empirical
/// stand-in for the O(1) constant of a computable bijection.
struct SwapOverheadReport {
  std::size_t sample_size = 0;
  long long d_max = 0;
  long long d_min = 0;
  Real d_mean = 0.0L;
  long long c_hat = 0;  // max observed shift
};

inline SwapOverheadReport swap_overhead_probe(const std::vector<Nat>& sample,
                                              const Codec& codec = builtin_codec()) {
  if (sample.empty())
    throw domain_error("swap_overhead_probe: sample must be nonempty");
  SwapOverheadReport report;
  report.sample_size = sample.size();
  bool first = true;
  Real sum = 0.0L;
  for (const Nat& y : sample) {
    auto [a, b] = cantor_unpair(y);
    Nat image = cantor_pair(b, a);
    auto d = static_cast<long long>(codec.code_length(image)) -
             static_cast<long long>(codec.code_length(y));
    sum += static_cast<Real>(d);
    if (first) {
      report.d_max = report.d_min = d;
      first = false;
    } else {
      report.d_max = std::max(report.d_max, d);
      report.d_min = std::min(report.d_min, d);
    }
  }
  report.d_mean = sum / static_cast<Real>(sample.size());
  report.c_hat = report.d_max;
  return report;
}

}  // namespace pairinfo
