#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pairinfo/errors.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/poly.hpp"

namespace pairinfo {

struct CollisionWitness {
  std::pair<Nat, Nat> first_point;
  std::pair<Nat, Nat> second_point;
  Nat value;
};

struct IntegralityWitness {
  std::pair<Nat, Nat> point;
  Rational value;  // non-integral or negative
};

enum class scan_verdict { not_injective, not_integer_valued, no_violation_found };

inline const char* to_string(scan_verdict v) {
  switch (v) {
    case scan_verdict::not_injective: return "NOT_INJECTIVE";
    case scan_verdict::not_integer_valued: return "NOT_INTEGER_VALUED";
    default: return "NO_VIOLATION_FOUND";
  }
}

/// Finite-box interrogation of a candidate on [0,N)^2. A violation here
/// falsifies bijectivity; NO_VIOLATION_FOUND proves nothing and the
/// report says so via its fields, not a claim.
///
/// Witness lists are capped; the *_count fields carry exact totals.
/// missing_below lists naturals under safe_threshold that the box never
/// attains -- the threshold is a growth bound guaranteeing any preimage
/// of a smaller value lies inside the box, so these are true gaps.
struct ScanReport {
  Nat box_side;
  scan_verdict verdict = scan_verdict::no_violation_found;
  std::vector<CollisionWitness> collisions;
  std::uint64_t collision_count = 0;
  std::vector<IntegralityWitness> integrality_violations;
  std::uint64_t integrality_count = 0;
  std::optional<Nat> min_value;
  std::optional<Nat> max_value;
  Nat safe_threshold;  // 0 when no monotone envelope exists
  std::vector<Nat> missing_below;
  std::uint64_t missing_count = 0;
  bool missing_truncated = false;

  static constexpr std::size_t kMaxWitnesses = 128;
  static constexpr std::size_t kMaxMissingListed = 1000;
};

namespace detail {

// Monotone envelope: with no negative coefficient the candidate is
// nondecreasing in each variable, so its minimum outside [0,N)^2 is
// attained on the near boundary. Returns ceil of that minimum, the
// largest threshold T such that every natural below T attainable at all
// is attained inside the box. No envelope -> 0.
inline Nat scan_safe_threshold(const MultiPoly& p, const Nat& box_side) {
  for (const auto& [e, c] : p.terms())
    if (c < 0) return Nat(0);
  KTuple corner_x({box_side, Nat(0)});
  KTuple corner_y({Nat(0), box_side});
  Rational m = eval_exact(p, corner_x);
  Rational my = eval_exact(p, corner_y);
  if (my < m) m = my;
  if (m <= 0) return Nat(0);
  return (numerator(m) + denominator(m) - 1) / denominator(m);
}

}  // namespace detail

inline ScanReport scan_bijectivity(const MultiPoly& p, const Nat& box_side) {
  if (p.arity() != 2) throw domain_error("scan_bijectivity: arity must be 2");
  if (box_side < 1) throw domain_error("scan_bijectivity: box side must be >= 1");
  if (box_side > Nat(1 << 16))
    throw domain_error("scan_bijectivity: box side capped at 2^16");
  auto n = static_cast<std::uint64_t>(box_side);

  ScanReport report;
  report.box_side = box_side;
  report.safe_threshold = detail::scan_safe_threshold(p, box_side);

  Nat cap = report.safe_threshold;
  if (cap > Nat(1 << 20)) {
    cap = Nat(1 << 20);
    report.safe_threshold = cap;
  }
  auto cap64 = static_cast<std::uint64_t>(cap);

  std::unordered_map<Nat, std::pair<Nat, Nat>> seen;
  seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n * n, 1u << 21)));
  std::vector<bool> attained_below(cap64, false);

  for (std::uint64_t xi = 0; xi < n; ++xi) {
    for (std::uint64_t yi = 0; yi < n; ++yi) {
      KTuple point({Nat(xi), Nat(yi)});
      Rational value = eval_exact(p, point);
      if (denominator(value) != 1 || numerator(value) < 0) {
        ++report.integrality_count;
        if (report.integrality_violations.size() < ScanReport::kMaxWitnesses)
          report.integrality_violations.push_back({{Nat(xi), Nat(yi)}, value});
        continue;
      }
      Nat v = numerator(value);
      if (!report.min_value || v < *report.min_value) report.min_value = v;
      if (!report.max_value || v > *report.max_value) report.max_value = v;
      if (v < cap) attained_below[static_cast<std::uint64_t>(v)] = true;

      auto [it, inserted] = seen.emplace(v, std::make_pair(Nat(xi), Nat(yi)));
      if (!inserted) {
        ++report.collision_count;
        if (report.collisions.size() < ScanReport::kMaxWitnesses)
          report.collisions.push_back({it->second, {Nat(xi), Nat(yi)}, v});
      }
    }
  }

  for (std::uint64_t v = 0; v < cap64; ++v) {
    if (attained_below[v]) continue;
    ++report.missing_count;
    if (report.missing_below.size() < ScanReport::kMaxMissingListed)
      report.missing_below.push_back(Nat(v));
    else
      report.missing_truncated = true;
  }

  if (report.integrality_count > 0)
    report.verdict = scan_verdict::not_integer_valued;
  else if (report.collision_count > 0)
    report.verdict = scan_verdict::not_injective;
  else
    report.verdict = scan_verdict::no_violation_found;
  return report;
}

}  // namespace pairinfo
