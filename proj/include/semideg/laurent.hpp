#pragma once

#include <map>
#include <string>
#include <utility>

#include "semideg/dwps.hpp"
#include "semideg/field.hpp"

namespace semideg {

// Element of C[x, x^{-1}, y]: finite map (a,b) -> coeff for x^a y^b with
// integer a (possibly negative) and b >= 0. No zero coefficients are stored.
class LaurentPoly2 {
public:
  using Key = std::pair<long, long>; // (x exponent, y exponent)

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(const FieldElem& c, long a, long b);
  static LaurentPoly2 one() { return monomial(FieldElem(1L), 0, 0); }
  static LaurentPoly2 var_x() { return monomial(FieldElem(1L), 1, 0); }
  static LaurentPoly2 var_y() { return monomial(FieldElem(1L), 0, 1); }

  void add_term(long a, long b, const FieldElem& c);
  const std::map<Key, FieldElem>& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  bool is_polynomial() const; // all x exponents >= 0
  long deg_y() const;         // max y exponent; requires nonzero
  long total_deg() const;     // max a+b; requires polynomial and nonzero

  // coefficient of y^b as a map x-exponent -> coeff
  std::map<long, FieldElem> coeff_y(long b) const;

  LaurentPoly2 operator-() const;
  friend LaurentPoly2 operator+(const LaurentPoly2& f, const LaurentPoly2& g);
  friend LaurentPoly2 operator-(const LaurentPoly2& f, const LaurentPoly2& g);
  friend LaurentPoly2 operator*(const LaurentPoly2& f, const LaurentPoly2& g);
  LaurentPoly2 scale(const FieldElem& c) const;
  LaurentPoly2 pow(long e) const; // e >= 0
  bool operator==(const LaurentPoly2& o) const { return m_ == o.m_; }
  bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::map<Key, FieldElem> m_;
};

// Product over the conjugates of phi of (y - phi_j), expanded. The x-exponents
// are integers by conjugation invariance (asserted); monic in y of degree p.
LaurentPoly2 minpoly(const Dwps& phi);

// Plain substitution f(x, psi) with psi a Dwps (no generic term).
Dwps subst_series(const LaurentPoly2& f, const Dwps& psi);

} // namespace semideg
