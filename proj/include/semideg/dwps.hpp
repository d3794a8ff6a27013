#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semideg/field.hpp"
#include "semideg/rat.hpp"

namespace semideg {

struct DwpsTerm {
  Rat e;       // exponent
  FieldElem c; // nonzero coefficient
};

// Finite degree-wise Puiseux series: terms with strictly decreasing rational
// exponents. deg(0) is the -infinity sentinel (empty optional).
class Dwps {
public:
  Dwps() = default;
  static Dwps monomial(const FieldElem& c, const Rat& e);
  static Dwps from_terms(std::vector<DwpsTerm> terms);

  const std::vector<DwpsTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::optional<Rat> deg() const;
  Rat low() const; // smallest exponent; series must be nonzero
  long polydromy() const;
  FieldElem coeff_at(const Rat& e) const;

  Dwps truncate_above(const Rat& r) const; // [phi]_{> r}
  Dwps truncate_geq(const Rat& r) const;   // [phi]_{>= r}

  Dwps operator-() const;
  friend Dwps operator+(const Dwps& a, const Dwps& b);
  friend Dwps operator-(const Dwps& a, const Dwps& b);
  friend Dwps operator*(const Dwps& a, const Dwps& b);
  Dwps scale(const FieldElem& c) const;
  Dwps shift(const Rat& e) const; // multiply by x^e
  bool operator==(const Dwps& o) const;
  bool operator!=(const Dwps& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::vector<DwpsTerm> t_;
};

// deg comparison where an empty optional means -infinity
inline bool deg_le(const std::optional<Rat>& d, const Rat& r) {
  return !d || *d <= r;
}

struct PuiseuxData {
  long p = 1;                             // polydromy order
  std::vector<std::pair<Int, Int>> pairs; // Puiseux pairs (q_j, p_j)
  std::vector<Rat> char_exps;             // q_j / (p_1...p_j)
};

PuiseuxData analyze(const Dwps& phi);

// The p conjugates phi_j = sum a_q zeta_p^{jq} x^{q/p}; phi itself is entry 0.
std::vector<Dwps> conjugates(const Dwps& phi);

// c *_r phi = sum a_j c^{q_j r / p} x^{q_j / p}; r must be a positive multiple
// of the polydromy order p.
Dwps star(const FieldElem& c, long r, const Dwps& phi);

// true iff psi equals some conjugate of phi
bool conjugate_equal(const Dwps& phi, const Dwps& psi);

} // namespace semideg
