#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pairinfo/errors.hpp"
#include "pairinfo/info.hpp"
#include "pairinfo/nat.hpp"

namespace pairinfo {

/// Geometric sampling plan for the line y = h*x. x_start must be a
/// positive multiple of denominator(h) so every sampled y is a natural.
struct RaySpec {
  Rational h;
  Nat x_start;
  unsigned growth_ratio = 4;
  std::size_t steps = 12;
  Real tol = 1e-6L;        // terminal oscillation bound, bits
  Real slope_tol = 1e-3L;  // drift bound, bits per log2(x) unit

  void validate() const {
    if (h <= 0) throw domain_error("RaySpec: slope must be > 0");
    if (x_start <= 0) throw domain_error("RaySpec: x_start must be > 0");
    if (x_start % denominator(h) != 0)
      throw domain_error("RaySpec: x_start must be a multiple of denominator(h)");
    if (x_start * numerator(h) < denominator(h))
      throw domain_error("RaySpec: h * x_start must be >= 1");
    if (growth_ratio < 2) throw domain_error("RaySpec: growth_ratio must be >= 2");
    if (steps < 4) throw domain_error("RaySpec: steps must be >= 4");
    if (!(tol > 0) || !(slope_tol > 0))
      throw domain_error("RaySpec: tolerances must be > 0");
  }
};

/// Default plan: start near 2^20 (rounded up to clear the denominator and
/// to keep h*x >= 1) with ratio 4 over 12 steps, reaching x ~ 2^42.
inline RaySpec default_ray_spec(const Rational& h) {
  if (h <= 0) throw domain_error("default_ray_spec: slope must be > 0");
  Nat den = denominator(h);
  Nat num = numerator(h);
  Nat multiplier = ((Nat(1) << 20) + den - 1) / den;
  Nat floor_mult = (den + num - 1) / num;  // ceil(1/h), keeps h*x >= 1
  if (multiplier < floor_mult) multiplier = floor_mult;
  return RaySpec{h, den * multiplier};
}

struct RaySample {
  Nat x;
  Real delta_bits;
};

/// Samples of delta along one ray plus convergence diagnostics.
/// c_estimate is the last sampled delta; residual is the spread of the
/// final three samples; drift_slope is the least-squares slope of delta
/// against log2(x).
struct RayReport {
  RaySpec spec;
  std::vector<RaySample> samples;
  Real c_estimate = 0.0L;
  Real drift_slope = 0.0L;
  Real residual = 0.0L;
  bool converged = false;
};

/// Drive a map N^2 -> N along y = h*x at x = x_start * ratio^i and fit
/// the drift of delta. The map must return naturals >= 1 on the sampled
/// points; zero outputs are domain errors naming the point.
template <typename MapFn>
RayReport ray_limit_estimate(MapFn&& f, const RaySpec& spec) {
  spec.validate();

  RayReport report;
  report.spec = spec;
  report.samples.reserve(spec.steps);

  Nat num = numerator(spec.h);
  Nat den = denominator(spec.h);

  Nat x = spec.x_start;
  for (std::size_t i = 0; i < spec.steps; ++i, x *= spec.growth_ratio) {
    Nat y = x / den * num;
    Nat value = f(x, y);
    if (value <= 0)
      throw domain_error("ray sample at x=" + to_decimal(x) +
                         " produced a non-positive value");
    Real d = info_content(value) - info_content(x) - info_content(y);
    report.samples.push_back({x, d});
  }

  // Least squares of delta against t = log2(x); t is an arithmetic
  // progression so only the deltas vary.
  const std::size_t n = report.samples.size();
  Real t_mean = 0.0L, d_mean = 0.0L;
  std::vector<Real> ts(n);
  for (std::size_t i = 0; i < n; ++i) {
    ts[i] = info_content(report.samples[i].x);
    t_mean += ts[i];
    d_mean += report.samples[i].delta_bits;
  }
  t_mean /= n;
  d_mean /= n;
  Real sxx = 0.0L, sxy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    Real dt = ts[i] - t_mean;
    sxx += dt * dt;
    sxy += dt * (report.samples[i].delta_bits - d_mean);
  }
  report.drift_slope = sxy / sxx;

  Real lo = report.samples[n - 3].delta_bits;
  Real hi = lo;
  for (std::size_t i = n - 3; i < n; ++i) {
    lo = std::min(lo, report.samples[i].delta_bits);
    hi = std::max(hi, report.samples[i].delta_bits);
  }
  report.residual = hi - lo;
  report.c_estimate = report.samples.back().delta_bits;
  report.converged = std::fabs(report.drift_slope) < spec.slope_tol &&
                     report.residual < spec.tol;
  return report;
}

/// Long-run behaviour of delta read off a finished ray report: settled
/// reports are CONSTANT, steady growth is EXPANDING, steady loss is
/// DISCARDING. A report that neither settles nor drifts past the slope
/// tolerance is INCONCLUSIVE.
enum class efficiency_class { constant, expanding, discarding, inconclusive };

inline efficiency_class classify(const RayReport& report) {
  if (report.converged) return efficiency_class::constant;
  if (report.drift_slope > report.spec.slope_tol) return efficiency_class::expanding;
  if (report.drift_slope < -report.spec.slope_tol) return efficiency_class::discarding;
  return efficiency_class::inconclusive;
}

inline const char* to_string(efficiency_class c) {
  switch (c) {
    case efficiency_class::constant: return "CONSTANT";
    case efficiency_class::expanding: return "EXPANDING";
    case efficiency_class::discarding: return "DISCARDING";
    default: return "INCONCLUSIVE";
  }
}

}  // namespace pairinfo
