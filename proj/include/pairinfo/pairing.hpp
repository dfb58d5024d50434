#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pairinfo/errors.hpp"
#include "pairinfo/nat.hpp"

namespace pairinfo {

/// Fixed-arity point in N^k. Arity is set at construction and must be
/// at least one.
class KTuple {
 public:
  explicit KTuple(std::vector<Nat> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw domain_error("KTuple: arity must be >= 1");
    for (const Nat& c : coords_) require_nonnegative(c, "KTuple");
  }

  KTuple(std::initializer_list<Nat> coords) : KTuple(std::vector<Nat>(coords)) {}

  std::size_t arity() const { return coords_.size(); }
  const Nat& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Nat>& coords() const { return coords_; }

  bool operator==(const KTuple& other) const = default;

 private:
  std::vector<Nat> coords_;
};

/// (x+y)(x+y+1)/2 + y. The product of two consecutive integers is even,
/// so the halving is an exact shift.
inline Nat cantor_pair(const Nat& x, const Nat& y) {
  require_nonnegative(x, "cantor_pair");
  require_nonnegative(y, "cantor_pair");
  Nat s = x + y;
  return ((s * (s + 1)) >> 1) + y;
}

/// Mirror image: pair(y, x).
inline Nat cantor_pair_sym(const Nat& x, const Nat& y) {
  return cantor_pair(y, x);
}

/// Inverse of cantor_pair via the triangular root
/// w = floor((isqrt(8n+1) - 1) / 2), then y = n - w(w+1)/2, x = w - y.
inline std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  require_nonnegative(n, "cantor_unpair");
  Nat w = (isqrt(8 * n + 1) - 1) >> 1;
  Nat t = (w * (w + 1)) >> 1;
  Nat y = n - t;
  Nat x = w - y;
  return {std::move(x), std::move(y)};
}

/// Left-nested k-dimensional code: pair_k(x1) = x1,
/// pair_k(x1,...,xk) = cantor_pair(pair_k(x1,...,x(k-1)), xk).
inline Nat pair_k(const KTuple& xs) {
  Nat acc = xs[0];
  for (std::size_t i = 1; i < xs.arity(); ++i) acc = cantor_pair(acc, xs[i]);
  return acc;
}

/// Inverse of pair_k at a fixed arity k >= 1.
inline KTuple unpair_k(const Nat& n, std::size_t k) {
  require_nonnegative(n, "unpair_k");
  if (k == 0) throw domain_error("unpair_k: arity must be >= 1");
  std::vector<Nat> coords(k);
  Nat acc = n;
  for (std::size_t i = k; i-- > 1;) {
    auto [head, last] = cantor_unpair(acc);
    coords[i] = std::move(last);
    acc = std::move(head);
  }
  coords[0] = std::move(acc);
  return KTuple(std::move(coords));
}

}  // namespace pairinfo
