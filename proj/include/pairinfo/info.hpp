#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>

#include "pairinfo/errors.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/pairing.hpp"

namespace pairinfo {

/// log2(x) for x >= 1, absolute error below 2^-48 at any magnitude.
///
/// The value is split as x = m * 2^e with m the leading (up to) 64 bits;
/// e is exact and log2l of the mantissa carries a 64-bit significand, so
/// the truncation and rounding errors stay near 2^-57.
inline Real info_content(const Nat& x) {
  require_nonnegative(x, "info_content");
  if (x == 0) throw domain_error("info_content: log of 0 is undefined");
  std::size_t bits = bit_length(x);
  if (bits <= 64)
    return std::log2(static_cast<Real>(static_cast<std::uint64_t>(x)));
  std::size_t shift = bits - 64;
  auto mantissa = static_cast<std::uint64_t>(x >> shift);
  return static_cast<Real>(shift) + std::log2(static_cast<Real>(mantissa));
}

/// Input information of a point: the sum of the coordinates' bits.
/// Every coordinate must be >= 1.
inline Real info_content(const KTuple& xs) {
  Real total = 0.0L;
  for (const Nat& c : xs.coords()) {
    if (c == 0)
      throw domain_error("info_content: tuple has a zero coordinate");
    total += info_content(c);
  }
  return total;
}

/// Efficiency of one application: output bits minus input bits.
/// delta(out, in) is the precomputed-output form; delta(f, in) evaluates
/// the map. Zero coordinates and zero outputs are domain errors.
inline Real delta(const Nat& output, const KTuple& inputs) {
  if (output == 0) throw domain_error("delta: map produced 0, log undefined");
  return info_content(output) - info_content(inputs);
}

template <typename MapFn>
  requires std::invocable<MapFn&, const KTuple&>
Real delta(MapFn&& f, const KTuple& inputs) {
  return delta(f(inputs), inputs);
}

/// Limit constant of the Cantor code along y = hx:
/// log2((1+h)^2 / (2h)), evaluated from the exact rational.
inline Real analytic_ray_constant(const Rational& h) {
  if (h <= 0) throw domain_error("analytic_ray_constant: slope must be > 0");
  Rational one_plus = h + 1;
  Rational value = (one_plus * one_plus) / (2 * h);
  return info_content(numerator(value)) - info_content(denominator(value));
}

}  // namespace pairinfo
