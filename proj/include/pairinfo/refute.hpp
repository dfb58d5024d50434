#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pairinfo/errors.hpp"
#include "pairinfo/info.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/poly.hpp"
#include "pairinfo/ray.hpp"

namespace pairinfo {

/// One ray's slice of a refutation. Rays where the candidate's leading
/// form vanishes carry no drift evidence and are flagged instead of
/// estimated.
struct RayFinding {
  Rational h;
  bool leading_form_vanishes = false;
  RayReport report;               // empty samples when flagged
  Real estimated_degree = 0.0L;   // 2 + drift_slope
};

enum class refute_verdict { refuted, consistent_with_degree_2, all_rays_degenerate };

inline const char* to_string(refute_verdict v) {
  switch (v) {
    case refute_verdict::refuted: return "REFUTED";
    case refute_verdict::consistent_with_degree_2: return "CONSISTENT_WITH_DEGREE_2";
    default: return "ALL_RAYS_DEGENERATE";
  }
}

struct RefutationReport {
  std::vector<RayFinding> rays;
  refute_verdict verdict = refute_verdict::all_rays_degenerate;
  Real slope_floor = 0.5L;
  Real max_abs_drift = 0.0L;
  long estimated_degree = 2;  // from the ray with the largest |drift|
};

namespace detail {

// Leading form restricted to y = hx collapses to ell(h) * x^degree;
// the candidate's top degree is invisible on rays where ell vanishes.
inline Rational leading_form_on_ray(const MultiPoly& p, const Rational& h) {
  Rational acc(0);
  const MultiPoly lead = p.leading_form();
  for (const auto& [e, c] : lead.terms()) acc += c * rational_pow(h, e[1]);
  return acc;
}

}  // namespace detail

/// Evaluate a candidate's map adapter on a ray sample.
inline auto poly_ray_fn(const MultiPoly& p) {
  return [&p](const Nat& x, const Nat& y) { return eval_nat(p, KTuple({x, y})); };
}

/// Sampling knobs shared by every ray of one refutation; the per-ray
/// x_start always comes from default_ray_spec so the denominator
/// constraint holds.
struct RefuteOptions {
  unsigned growth_ratio = 4;
  std::size_t steps = 12;
  Real tol = 1e-6L;
  Real slope_tol = 1e-3L;
  Real slope_floor = 0.5L;
};

/// Drive the drift estimator along each ray and compare the observed
/// slope of delta against the degree-2 baseline. |drift| >= slope_floor
/// on any usable ray refutes the candidate; a degree-n leading term that
/// survives on the ray shows up as drift n-2.
///
/// Domain errors from evaluation (negative or fractional values on a
/// sampled point) propagate with the witness point.
inline RefutationReport refute_degree(const MultiPoly& p,
                                      const std::vector<Rational>& rays,
                                      const RefuteOptions& options = {}) {
  if (p.arity() != 2) throw domain_error("refute_degree: arity must be 2");
  if (rays.empty()) throw domain_error("refute_degree: at least one ray required");

  RefutationReport report;
  report.slope_floor = options.slope_floor;
  bool any_included = false;

  for (const Rational& h : rays) {
    if (h <= 0) throw domain_error("refute_degree: ray slopes must be > 0");
    RayFinding finding;
    finding.h = h;
    finding.leading_form_vanishes = detail::leading_form_on_ray(p, h) == 0;
    if (!finding.leading_form_vanishes) {
      RaySpec spec = default_ray_spec(h);
      spec.growth_ratio = options.growth_ratio;
      spec.steps = options.steps;
      spec.tol = options.tol;
      spec.slope_tol = options.slope_tol;
      finding.report = ray_limit_estimate(poly_ray_fn(p), spec);
      finding.estimated_degree = 2.0L + finding.report.drift_slope;
      any_included = true;
      Real drift = finding.report.drift_slope;
      if (std::fabs(drift) >= report.max_abs_drift) {
        report.max_abs_drift = std::fabs(drift);
        report.estimated_degree = std::lround(2.0L + drift);
      }
    }
    report.rays.push_back(std::move(finding));
  }

  if (!any_included)
    report.verdict = refute_verdict::all_rays_degenerate;
  else if (report.max_abs_drift >= options.slope_floor)
    report.verdict = refute_verdict::refuted;
  else
    report.verdict = refute_verdict::consistent_with_degree_2;
  return report;
}

/// Default ray set for refutations.
inline std::vector<Rational> default_refutation_rays() {
  return {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
}

}  // namespace pairinfo
