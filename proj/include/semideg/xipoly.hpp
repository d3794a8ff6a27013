#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semideg/field.hpp"

namespace semideg {

// Dense univariate polynomial in the generic coefficient xi.
class XiPoly {
public:
  XiPoly() = default; // zero
  XiPoly(const FieldElem& c);
  static XiPoly xi() { return monomial(FieldElem(1L), 1); }
  static XiPoly monomial(const FieldElem& c, long k);

  bool is_zero() const { return c_.empty(); }
  bool is_const() const { return c_.size() <= 1; }
  FieldElem const_val() const; // requires is_const
  long deg() const;            // requires nonzero
  FieldElem coeff(long k) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  XiPoly operator-() const;
  friend XiPoly operator+(const XiPoly& f, const XiPoly& g);
  friend XiPoly operator-(const XiPoly& f, const XiPoly& g);
  friend XiPoly operator*(const XiPoly& f, const XiPoly& g);
  XiPoly scale(const FieldElem& c) const;
  XiPoly pow(long e) const;
  bool operator==(const XiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XiPoly& o) const { return !(*this == o); }

  FieldElem eval(const FieldElem& v) const;
  long ord_at(const FieldElem& v) const; // root multiplicity; requires nonzero

  std::string str() const;

private:
  void trim();
  std::vector<FieldElem> c_; // c_[k] = coefficient of xi^k
};

// Decomposition f = unit * xi^s * (xi^m - c)^t with constant unit. Returns
// nullopt when f is not of this shape; t = 0 carries c = 0.
struct XiShape {
  FieldElem unit;
  long s = 0;
  long m = 1;
  long t = 0;
  FieldElem c;
};
std::optional<XiShape> xi_shape(const XiPoly& f, long m);

} // namespace semideg
