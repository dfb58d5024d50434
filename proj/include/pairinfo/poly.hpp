#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pairinfo/errors.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/pairing.hpp"

namespace pairinfo {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then exponent vectors
/// compared left to right. Keeps term maps canonical and iteration
/// deterministic.
struct grlex_less {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored; terms sit in a grlex-ordered map.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, grlex_less>;

  explicit MultiPoly(std::size_t arity) : arity_(arity) {
    if (arity == 0) throw domain_error("MultiPoly: arity must be >= 1");
  }

  static MultiPoly constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    if (c != 0) p.terms_[Exponents(arity, 0)] = c;
    return p;
  }

  static MultiPoly variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw domain_error("MultiPoly: variable index out of range");
    MultiPoly p(arity);
    Exponents e(arity, 0);
    e[index] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
  }

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const {
    if (terms_.empty()) return 0;
    const Exponents& top = terms_.rbegin()->first;
    return std::accumulate(top.begin(), top.end(), 0u);
  }

  void add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != arity_) throw domain_error("MultiPoly: exponent arity mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (c != 0) terms_[exps] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    check_same_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& other) {
    check_same_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_arity(b);
    MultiPoly out(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.arity_);
        for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  MultiPoly pow(unsigned exp) const {
    MultiPoly result = constant(arity_, 1);
    MultiPoly base = *this;
    while (exp > 0) {
      if (exp & 1u) result = result * base;
      base = base * base;
      exp >>= 1;
    }
    return result;
  }

  /// Terms of maximal total degree, as a polynomial.
  MultiPoly leading_form() const {
    MultiPoly out(arity_);
    unsigned d = degree();
    for (const auto& [e, c] : terms_) {
      if (std::accumulate(e.begin(), e.end(), 0u) == d) out.terms_[e] = c;
    }
    return out;
  }

  bool operator==(const MultiPoly& other) const = default;

 private:
  void check_same_arity(const MultiPoly& other) const {
    if (arity_ != other.arity_) throw domain_error("MultiPoly: arity mismatch");
  }

  std::size_t arity_;
  TermMap terms_;
};

/// Variable names used by the expression grammar and the printer:
/// "x" at arity 1, "x"/"y" at arity 2, "x1".."xk" beyond.
inline std::string variable_name(std::size_t arity, std::size_t index) {
  if (arity == 1) return "x";
  if (arity == 2) return index == 0 ? "x" : "y";
  return "x" + std::to_string(index + 1);
}

namespace detail {

struct PolyTerm {
  const Exponents* exps;
  const Rational* coeff;
};

// Horner on variable v: group terms by the exponent of v, fold buckets
// from the highest exponent down, multiplying by x_v^(gap) between
// buckets, and recurse on the remaining variables inside each bucket.
inline Rational horner_eval(const std::vector<PolyTerm>& terms, std::size_t v,
                            const KTuple& point) {
  if (terms.empty()) return Rational(0);
  if (v == point.arity()) return *terms.front().coeff;  // single constant bucket

  std::map<unsigned, std::vector<PolyTerm>, std::greater<>> buckets;
  for (const PolyTerm& t : terms) buckets[(*t.exps)[v]].push_back(t);

  Rational acc(0);
  unsigned prev_exp = buckets.begin()->first;
  for (const auto& [e, bucket] : buckets) {
    if (e != prev_exp)
      acc *= Rational(nat_pow(point[v], prev_exp - e));
    acc += horner_eval(bucket, v + 1, point);
    prev_exp = e;
  }
  if (prev_exp > 0) acc *= Rational(nat_pow(point[v], prev_exp));
  return acc;
}

}  // namespace detail

/// Exact value at a lattice point, by nested Horner over the rationals.
inline Rational eval_exact(const MultiPoly& p, const KTuple& point) {
  if (point.arity() != p.arity())
    throw eval_error(eval_error::kind::arity_mismatch,
                     "eval: point arity " + std::to_string(point.arity()) +
                         " does not match polynomial arity " +
                         std::to_string(p.arity()),
                     "");
  std::vector<detail::PolyTerm> terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) terms.push_back({&e, &c});
  return detail::horner_eval(terms, 0, point);
}

inline std::string point_to_string(const KTuple& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.arity(); ++i) {
    if (i) out += ", ";
    out += to_decimal(point[i]);
  }
  return out + ")";
}

/// Value at a lattice point when it is a natural; otherwise an eval_error
/// carrying the witness point.
inline Nat eval_nat(const MultiPoly& p, const KTuple& point) {
  Rational value = eval_exact(p, point);
  if (denominator(value) != 1)
    throw eval_error(eval_error::kind::non_integral,
                     "value " + rational_to_string(value) + " at " +
                         point_to_string(point) + " is not an integer",
                     point_to_string(point));
  Nat n = numerator(value);
  if (n < 0)
    throw eval_error(eval_error::kind::negative,
                     "value " + to_decimal(n) + " at " + point_to_string(point) +
                         " is negative",
                     point_to_string(point));
  return n;
}

/// Canonical rendering: grlex-descending terms, explicit '*', "p/q"
/// coefficients, '^' only above exponent 1. parse_poly(to_string(p))
/// reproduces p exactly.
inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += variable_name(p.arity(), i);
      if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
    }
    if (vars.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += rational_to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace pairinfo
