#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semideg/rat.hpp"

namespace semideg {

// Element of Q(zeta_n), stored as the unique representative of degree
// < deg(Phi_n) modulo the n-th cyclotomic polynomial. Rationals are always
// normalized to n = 1, so `order() == 1` iff the element is rational.
// Minimal-subfield reduction (`reduced()`) is applied on demand (I/O,
// canonical keys), not after every operation.
class FieldElem {
public:
  FieldElem() : n_(1) {}
  FieldElem(const Rat& q) : n_(1) { // NOLINT: implicit by design
    if (q != 0) c_.push_back(q);
  }
  FieldElem(long v) : FieldElem(Rat(v)) {} // NOLINT
  static FieldElem zeta(int n, long k = 1);

  int order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rat() const { return n_ == 1; }
  Rat as_rat() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  FieldElem inv() const;
  FieldElem pow(long e) const; // negative e allowed for nonzero elements

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Equal element in the smallest cyclotomic subfield containing it.
  FieldElem reduced() const;
  // Same element viewed in Q(zeta_m); m must be a multiple of order().
  FieldElem to_order(int m) const;

  std::string str() const;

private:
  int n_;
  std::vector<Rat> c_;

  void normalize(); // reduce mod Phi_n, trim, collapse rationals to n=1
  friend FieldElem raw_make(int n, std::vector<Rat> c);
};

// Cyclotomic polynomial Phi_n as a dense rational coefficient vector
// (index = power), memoized.
const std::vector<Rat>& cyclotomic_poly(int n);

// Exact k-th root c of `val` (c^k = val) within cyclotomic-rational reach:
// values of the form (rational) * (root of unity). Empty when no such root
// exists in any allowed extension.
std::optional<FieldElem> try_root(const FieldElem& val, long k);

// lcm of two cyclotomic orders, checked against the configured cap.
int checked_lcm_order(int a, int b);

} // namespace semideg
