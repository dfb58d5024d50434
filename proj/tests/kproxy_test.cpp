#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "pairinfo/kproxy.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/pairing.hpp"

using namespace pairinfo;

namespace {

// Independent wedge oracle: per-point membership h <= y/x <= h+eps,
// tested as cross-multiplied integer comparisons.
std::uint64_t brute_wedge_count(std::uint64_t p, std::uint64_t q, std::uint64_t pp,
                                std::uint64_t qq, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    for (std::uint64_t y = 0; y <= n; ++y) {
      if (p * x <= q * y && qq * y <= pp * x) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("census matches frozen counts under the builtin codec", "[census]") {
  SECTION("16-bit range") {
    CensusReport loose = census(Nat(1) << 16, 0);
    CHECK(loose.count_compressible == 255);
    CHECK(loose.bound == 2.0L);
    CHECK(loose.fraction <= loose.bound);

    CensusReport tight = census(Nat(1) << 16, 8);
    CHECK(tight.count_compressible == 0);
    CHECK(tight.fraction <= tight.bound);
    CHECK(tight.bound == std::exp2(-7.0L));
  }

  SECTION("20-bit range") {
    CensusReport report = census(Nat(1) << 20, 12);
    CHECK(report.count_compressible == 0);
    CHECK(report.fraction <= report.bound);
    CHECK(report.bound == std::exp2(-11.0L));
  }
}

TEST_CASE("census rejects degenerate ranges", "[census]") {
  CHECK_THROWS_AS(census(1, 4), domain_error);
  CHECK_THROWS_AS(census(Nat(1) << 40, 4), domain_error);
  CHECK_NOTHROW(census(2, 0));
}

TEST_CASE("wedge density approaches the clipped-area fraction", "[wedge]") {
  SECTION("thin wedge below the diagonal") {
    WedgeReport report = wedge_points({Rational(1, 2), Rational(1, 4), 10000});
    CHECK(report.area_fraction ==
          Catch::Approx(0.125).epsilon(1e-12));
    CHECK(std::fabs(report.lattice_fraction - 0.125L) <= 2.0L / 10000.0L);
  }

  SECTION("wedge straddling the diagonal") {
    WedgeReport report = wedge_points({Rational(1), Rational(1, 2), 10000});
    CHECK(report.area_fraction == Catch::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(std::fabs(report.lattice_fraction - 1.0L / 6.0L) <= 2.0L / 10000.0L);
  }

  SECTION("degenerate zero-width wedge keeps only the line") {
    WedgeReport report = wedge_points({Rational(1, 2), Rational(0), 10000});
    CHECK(report.lattice_count == 5001);  // x even, y = x/2
    CHECK(report.area_fraction == 0.0L);
    CHECK(report.lattice_fraction < 1e-3L);
  }
}

TEST_CASE("wedge counts equal a per-point oracle", "[wedge]") {
  struct Case {
    Rational h, eps;
    std::uint64_t p, q, pp, qq;
  };
  std::vector<Case> cases = {
      {Rational(1), Rational(1, 2), 1, 1, 3, 2},
      {Rational(1, 2), Rational(1, 4), 1, 2, 3, 4},
      {Rational(2, 3), Rational(1, 6), 2, 3, 5, 6},
      {Rational(3), Rational(2), 3, 1, 5, 1},
  };
  for (const Case& c : cases) {
    WedgeReport report = wedge_points({c.h, c.eps, 1000});
    std::uint64_t expected = brute_wedge_count(c.p, c.q, c.pp, c.qq, 1000);
    CHECK(report.lattice_count == expected);
  }
}

TEST_CASE("wedge discrepancy bound holds on varied specs", "[wedge]") {
  std::vector<WedgeSpec> specs = {
      {Rational(1, 3), Rational(1, 3), 5000},
      {Rational(2), Rational(1), 5000},
      {Rational(1), Rational(3), 5000},
      {Rational(5, 7), Rational(2, 9), 5000},
  };
  for (const WedgeSpec& spec : specs) {
    WedgeReport report = wedge_points(spec);
    Real n = static_cast<Real>(static_cast<std::uint64_t>(spec.box_side));
    CHECK(std::fabs(report.lattice_fraction - report.area_fraction) <= 4.0L / n);
  }
}

TEST_CASE("wedge validation", "[wedge]") {
  CHECK_THROWS_AS(wedge_points({Rational(0), Rational(1, 2), 100}), domain_error);
  CHECK_THROWS_AS(wedge_points({Rational(1), Rational(-1, 2), 100}), domain_error);
  CHECK_THROWS_AS(wedge_points({Rational(1), Rational(1), 0}), domain_error);
}

TEST_CASE("swap recode overhead vanishes on the diagonal", "[kproxy]") {
  std::vector<Nat> diagonal;
  for (std::uint64_t a = 0; a < 200; ++a)
    diagonal.push_back(cantor_pair(Nat(a), Nat(a)));
  SwapOverheadReport report = swap_overhead_probe(diagonal);
  CHECK(report.sample_size == 200);
  CHECK(report.d_max == 0);
  CHECK(report.d_min == 0);
  CHECK(report.d_mean == 0.0L);
  CHECK(report.c_hat == 0);
}

TEST_CASE("swap recode overhead at a frozen point", "[kproxy]") {
  // 7 unpairs to (2,1); the swapped pair is (1,2) whose code is 8.
  auto [a, b] = cantor_unpair(Nat(7));
  CHECK(a == 2);
  CHECK(b == 1);
  CHECK(cantor_pair(b, a) == 8);

  SwapOverheadReport report = swap_overhead_probe({Nat(7)});
  const Codec& codec = builtin_codec();
  long long expected = static_cast<long long>(codec.code_length(Nat(8))) -
                       static_cast<long long>(codec.code_length(Nat(7)));
  CHECK(report.d_max == expected);
  CHECK(report.d_min == expected);
  CHECK(expected == 0);  // both fit in one byte
}

TEST_CASE("swap recode overhead stays bounded over a dense sweep", "[kproxy]") {
  std::vector<Nat> prefix;
  prefix.reserve(1u << 16);
  for (std::uint64_t y = 0; y < (1u << 16); ++y) prefix.push_back(Nat(y));
  SwapOverheadReport wide = swap_overhead_probe(prefix);

  prefix.resize(1u << 12);
  SwapOverheadReport narrow = swap_overhead_probe(prefix);

  CHECK(wide.sample_size == (1u << 16));
  CHECK(wide.d_min <= 0);
  CHECK(wide.c_hat == wide.d_max);
  CHECK(static_cast<Real>(wide.d_min) <= wide.d_mean);
  CHECK(wide.d_mean <= static_cast<Real>(wide.d_max));
  // the maximum over a superset cannot shrink
  CHECK(wide.c_hat >= narrow.c_hat);
  // a one-position coordinate swap shifts codes by a few bits, not by
  // anything that scales with the sweep
  CHECK(wide.c_hat < 64);
}

TEST_CASE("swap recode overhead rejects empty samples", "[kproxy]") {
  CHECK_THROWS_AS(swap_overhead_probe({}), domain_error);
}
