#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>

#include "pairinfo/errors.hpp"

namespace pairinfo {

/// Unbounded non-negative integer. Functions taking a Nat require a
/// non-negative value and throw domain_error otherwise; functions
/// returning a Nat guarantee one.
using Nat = boost::multiprecision::cpp_int;

/// Exact fraction, kept in lowest terms with a positive denominator by
/// the backend.
using Rational = boost::multiprecision::cpp_rational;

/// All real-valued quantities (bits) are carried as long double so that
/// log2 of multi-thousand-bit integers keeps 2^-48 absolute accuracy.
using Real = long double;

inline void require_nonnegative(const Nat& n, const char* who) {
  if (n < 0) throw domain_error(std::string(who) + ": negative value");
}

/// Number of bits in the binary representation; 0 for the value 0.
inline std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return boost::multiprecision::msb(n) + 1;
}

/// Decimal rendering, no sign, no leading zeros.
inline std::string to_decimal(const Nat& n) { return n.str(); }

/// Strict decimal parse: digits only, no leading zeros except "0" itself.
inline Nat from_decimal(const std::string& text) {
  if (text.empty()) throw domain_error("empty decimal string");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw domain_error("invalid decimal digit in \"" + text + "\"");
  }
  if (text.size() > 1 && text[0] == '0')
    throw domain_error("leading zero in \"" + text + "\"");
  return Nat(text);
}

/// "p/q" or "p"; q must be positive. An optional leading '-' is accepted
/// so polynomial coefficients can round-trip through the same routine.
inline Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  Nat num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Nat(text);
    } else {
      num = Nat(text.substr(0, slash));
      den = Nat(text.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw domain_error("invalid rational \"" + text + "\"");
  }
  if (den <= 0) throw domain_error("denominator must be positive: \"" + text + "\"");
  return Rational(num, den);
}

inline std::string rational_to_string(const Rational& r) {
  Nat num = numerator(r);
  Nat den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

// Floor square root on machine words. sqrtl on a 64-bit mantissa is within
// one ulp, so one correction step settles the floor.
inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace detail

/// Floor of the square root, exact at any precision.
///
/// Newton iteration x <- (x + n/x)/2 started from a power of two that
/// dominates sqrt(n). The sequence decreases monotonically once past the
/// root, so the loop exits the first time it fails to shrink; a final
/// downward correction pins the floor.
inline Nat isqrt(const Nat& n) {
  require_nonnegative(n, "isqrt");
  if (n <= 1) return n;
  if (n <= Nat(std::uint64_t(1) << 62))
    return Nat(detail::isqrt_u64(static_cast<std::uint64_t>(n)));

  Nat x = Nat(1) << ((bit_length(n) + 1) / 2);  // x >= sqrt(n)
  Nat y = (x + n / x) >> 1;
  while (y < x) {
    x = y;
    y = (x + n / x) >> 1;
  }
  while (x * x > n) --x;
  return x;
}

/// Floor power with an unsigned exponent; pow(0, 0) = 1.
inline Nat nat_pow(const Nat& base, unsigned exp) {
  require_nonnegative(base, "nat_pow");
  return boost::multiprecision::pow(base, exp);
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(base), exp), pow(denominator(base), exp));
}

}  // namespace pairinfo
