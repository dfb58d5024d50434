#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pairinfo/info.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/pairing.hpp"
#include "pairinfo/parse.hpp"
#include "pairinfo/refute.hpp"
#include "pairinfo/scan.hpp"

using namespace pairinfo;

namespace {

const char* kCantorText = "1/2*(x+y)*(x+y+1)+y";
const char* kCantorSymText = "1/2*(x+y)*(x+y+1)+x";

// Brute-force duplicate finder with its own evaluation path: plain
// term-by-term powers over 64-bit integers. Coefficients must be
// naturals and values must stay small for the oracle to be valid.
struct BruteCollision {
  std::pair<std::uint64_t, std::uint64_t> first_point;
  std::pair<std::uint64_t, std::uint64_t> second_point;
  std::uint64_t value;
};

std::vector<BruteCollision> brute_force_collisions(
    const std::vector<std::pair<std::pair<unsigned, unsigned>, std::uint64_t>>& terms,
    std::uint64_t box) {
  auto eval = [&](std::uint64_t x, std::uint64_t y) {
    std::uint64_t acc = 0;
    for (const auto& [exps, coeff] : terms) {
      std::uint64_t t = coeff;
      for (unsigned i = 0; i < exps.first; ++i) t *= x;
      for (unsigned i = 0; i < exps.second; ++i) t *= y;
      acc += t;
    }
    return acc;
  };
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<BruteCollision> out;
  for (std::uint64_t x = 0; x < box; ++x) {
    for (std::uint64_t y = 0; y < box; ++y) {
      std::uint64_t v = eval(x, y);
      auto [it, inserted] = seen.emplace(v, std::make_pair(x, y));
      if (!inserted) out.push_back({it->second, {x, y}, v});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("scan finds the immediate collision of x+y", "[scan]") {
  ScanReport report = scan_bijectivity(parse_poly("x+y", 2), 2);
  CHECK(report.verdict == scan_verdict::not_injective);
  REQUIRE_FALSE(report.collisions.empty());
  const CollisionWitness& w = report.collisions.front();
  CHECK(w.first_point == std::pair<Nat, Nat>(0, 1));
  CHECK(w.second_point == std::pair<Nat, Nat>(1, 0));
  CHECK(w.value == 1);
}

TEST_CASE("scan finds the two-squares collision", "[scan]") {
  ScanReport report = scan_bijectivity(parse_poly("x^2+y^2", 2), 50);
  CHECK(report.verdict == scan_verdict::not_injective);
  CHECK(report.collision_count > 0);
  bool found = false;
  for (const CollisionWitness& w : report.collisions) {
    if (w.value == 25) found = true;
  }
  CHECK(found);
}

TEST_CASE("scan reports non-integral candidates", "[scan]") {
  ScanReport report = scan_bijectivity(parse_poly("1/2*x + y", 2), 4);
  CHECK(report.verdict == scan_verdict::not_integer_valued);
  CHECK(report.integrality_count > 0);
  REQUIRE_FALSE(report.integrality_violations.empty());
  CHECK(report.integrality_violations.front().point == std::pair<Nat, Nat>(1, 0));
  CHECK(report.integrality_violations.front().value == Rational(1, 2));
}

TEST_CASE("scan clears the quadratic pairing polynomials", "[scan]") {
  for (const char* text : {kCantorText, kCantorSymText}) {
    ScanReport report = scan_bijectivity(parse_poly(text, 2), 1000);
    INFO(text);
    CHECK(report.verdict == scan_verdict::no_violation_found);
    CHECK(report.collision_count == 0);
    CHECK(report.integrality_count == 0);
    CHECK(report.missing_count == 0);
    CHECK(report.safe_threshold == 500500);  // 1000*1001/2
    CHECK(*report.min_value == 0);
  }
}

TEST_CASE("scan coverage on a small box has no gaps below the threshold", "[scan]") {
  ScanReport report = scan_bijectivity(parse_poly(kCantorText, 2), 100);
  CHECK(report.verdict == scan_verdict::no_violation_found);
  CHECK(report.safe_threshold == 5050);  // 100*101/2
  CHECK(report.missing_count == 0);
  CHECK(*report.min_value == 0);
  CHECK(*report.max_value == cantor_pair(99, 99));
}

TEST_CASE("scan agrees with a brute-force oracle on random candidates", "[scan]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    // random natural-coefficient candidate of degree <= 3
    std::vector<std::pair<std::pair<unsigned, unsigned>, std::uint64_t>> terms;
    MultiPoly p(2);
    int n_terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < n_terms; ++t) {
      unsigned ex = rng() % 3;
      unsigned ey = rng() % (4 - ex);
      std::uint64_t c = 1 + rng() % 5;
      terms.push_back({{ex, ey}, c});
      Exponents e = {ex, ey};
      p.add_term(e, Rational(c));
    }
    const std::uint64_t box = 24;
    std::vector<BruteCollision> oracle = brute_force_collisions(terms, box);
    ScanReport report = scan_bijectivity(p, Nat(box));

    INFO("candidate: " << to_string(p));
    CHECK(report.collision_count == oracle.size());
    std::size_t compare = std::min(oracle.size(), ScanReport::kMaxWitnesses);
    REQUIRE(report.collisions.size() == compare);
    for (std::size_t i = 0; i < compare; ++i) {
      CHECK(report.collisions[i].first_point ==
            std::pair<Nat, Nat>(oracle[i].first_point.first, oracle[i].first_point.second));
      CHECK(report.collisions[i].second_point ==
            std::pair<Nat, Nat>(oracle[i].second_point.first, oracle[i].second_point.second));
      CHECK(report.collisions[i].value == oracle[i].value);
    }
  }
}

TEST_CASE("scan guards its domain", "[scan]") {
  CHECK_THROWS_AS(scan_bijectivity(parse_poly("x", 1), 10), domain_error);
  CHECK_THROWS_AS(scan_bijectivity(parse_poly("x+y", 2), 0), domain_error);
  CHECK_THROWS_AS(scan_bijectivity(parse_poly("x+y", 2), Nat(1) << 20), domain_error);
}

TEST_CASE("candidates with negative coefficients get no safe threshold", "[scan]") {
  ScanReport report = scan_bijectivity(parse_poly("x*y - y + x", 2), 8);
  CHECK(report.safe_threshold == 0);
  CHECK(report.missing_count == 0);
}

TEST_CASE("refutation by drift on cubic and quartic candidates", "[refute]") {
  SECTION("x^3+y on the unit ray") {
    RefutationReport report =
        refute_degree(parse_poly("x^3+y", 2), {Rational(1)});
    CHECK(report.verdict == refute_verdict::refuted);
    CHECK(report.estimated_degree == 3);
    REQUIRE(report.rays.size() == 1);
    CHECK_FALSE(report.rays[0].leading_form_vanishes);
    CHECK(report.rays[0].report.drift_slope == Catch::Approx(1.0).margin(0.05));
  }

  SECTION("x^4+x*y+y on two rays") {
    RefutationReport report =
        refute_degree(parse_poly("x^4+x*y+y", 2), {Rational(1), Rational(2)});
    CHECK(report.verdict == refute_verdict::refuted);
    CHECK(report.estimated_degree == 4);
    for (const RayFinding& finding : report.rays) {
      CHECK_FALSE(finding.leading_form_vanishes);
      CHECK(finding.report.drift_slope == Catch::Approx(2.0).margin(0.05));
    }
  }

  SECTION("degree matches for x^n+y, n in 3..5, on the unit ray") {
    for (unsigned n = 3; n <= 5; ++n) {
      MultiPoly p(2);
      p.add_term({n, 0}, 1);
      p.add_term({0, 1}, 1);
      RefutationReport report = refute_degree(p, {Rational(1)});
      CHECK(report.verdict == refute_verdict::refuted);
      CHECK(report.estimated_degree == static_cast<long>(n));
    }
  }
}

TEST_CASE("the quadratic pairing polynomial survives refutation", "[refute]") {
  RefutationReport report = refute_degree(
      parse_poly(kCantorText, 2), {Rational(1, 2), Rational(1), Rational(2)});
  CHECK(report.verdict == refute_verdict::consistent_with_degree_2);
  CHECK(report.estimated_degree == 2);
  for (const RayFinding& finding : report.rays) {
    REQUIRE_FALSE(finding.leading_form_vanishes);
    CHECK(finding.report.converged);
    CHECK(std::fabs(finding.report.c_estimate - analytic_ray_constant(finding.h)) <
          1e-6L);
    CHECK(classify(finding.report) == efficiency_class::constant);
  }
}

TEST_CASE("rays with a vanishing leading form are flagged", "[refute]") {
  MultiPoly p = parse_poly("(x - y)*(x - y)*(x - y)", 2);

  SECTION("only degenerate rays") {
    RefutationReport report = refute_degree(p, {Rational(1)});
    CHECK(report.verdict == refute_verdict::all_rays_degenerate);
    REQUIRE(report.rays.size() == 1);
    CHECK(report.rays[0].leading_form_vanishes);
    CHECK(report.rays[0].report.samples.empty());
  }

  SECTION("a usable ray still refutes") {
    RefutationReport report = refute_degree(p, {Rational(1), Rational(1, 2)});
    CHECK(report.verdict == refute_verdict::refuted);
    CHECK(report.estimated_degree == 3);
    CHECK(report.rays[0].leading_form_vanishes);
    CHECK_FALSE(report.rays[1].leading_form_vanishes);
  }
}

TEST_CASE("evaluation failures on a ray propagate", "[refute]") {
  // negative on y > x rays
  MultiPoly p = parse_poly("x^3 - y^3 + y", 2);
  CHECK_THROWS_AS(refute_degree(p, {Rational(2)}), eval_error);
}

TEST_CASE("refutation rejects bad ray sets", "[refute]") {
  MultiPoly p = parse_poly("x+y", 2);
  CHECK_THROWS_AS(refute_degree(p, {}), domain_error);
  CHECK_THROWS_AS(refute_degree(p, {Rational(-1)}), domain_error);
  CHECK_THROWS_AS(refute_degree(parse_poly("x", 1), {Rational(1)}), domain_error);
}

TEST_CASE("default ray set", "[refute]") {
  std::vector<Rational> rays = default_refutation_rays();
  REQUIRE(rays.size() == 5);
  CHECK(rays[0] == Rational(1, 3));
  CHECK(rays[2] == Rational(1));
  CHECK(rays[4] == Rational(3));
}
