#include "semideg/dwps.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "semideg/errors.hpp"

namespace semideg {

Dwps Dwps::monomial(const FieldElem& c, const Rat& e) {
  Dwps d;
  if (!c.is_zero()) d.t_.push_back({e, c});
  return d;
}

Dwps Dwps::from_terms(std::vector<DwpsTerm> terms) {
  std::map<Rat, FieldElem> acc;
  for (auto& t : terms) acc[t.e] += t.c;
  Dwps d;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) d.t_.push_back({it->first, it->second});
  return d;
}

std::optional<Rat> Dwps::deg() const {
  if (t_.empty()) return std::nullopt;
  return t_.front().e;
}

Rat Dwps::low() const {
  if (t_.empty()) throw InternalInvariant("low() of the zero series");
  return t_.back().e;
}

long Dwps::polydromy() const {
  Int l = 1;
  for (const auto& t : t_) l = lcm_int(l, t.e.get_den());
  return to_long(l);
}

FieldElem Dwps::coeff_at(const Rat& e) const {
  for (const auto& t : t_)
    if (t.e == e) return t.c;
  return FieldElem();
}

Dwps Dwps::truncate_above(const Rat& r) const {
  Dwps d;
  for (const auto& t : t_)
    if (t.e > r) d.t_.push_back(t);
  return d;
}

Dwps Dwps::truncate_geq(const Rat& r) const {
  Dwps d;
  for (const auto& t : t_)
    if (t.e >= r) d.t_.push_back(t);
  return d;
}

Dwps Dwps::operator-() const {
  Dwps d = *this;
  for (auto& t : d.t_) t.c = -t.c;
  return d;
}

Dwps operator+(const Dwps& a, const Dwps& b) {
  std::vector<DwpsTerm> terms = a.t_;
  terms.insert(terms.end(), b.t_.begin(), b.t_.end());
  return Dwps::from_terms(std::move(terms));
}

Dwps operator-(const Dwps& a, const Dwps& b) { return a + (-b); }

Dwps operator*(const Dwps& a, const Dwps& b) {
  std::vector<DwpsTerm> terms;
  for (const auto& s : a.t_)
    for (const auto& t : b.t_) terms.push_back({s.e + t.e, s.c * t.c});
  return Dwps::from_terms(std::move(terms));
}

Dwps Dwps::scale(const FieldElem& c) const {
  if (c.is_zero()) return Dwps();
  Dwps d = *this;
  for (auto& t : d.t_) t.c *= c;
  return d;
}

Dwps Dwps::shift(const Rat& e) const {
  Dwps d = *this;
  for (auto& t : d.t_) t.e += e;
  return d;
}

bool Dwps::operator==(const Dwps& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
  return true;
}

std::string Dwps::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    if (!first) os << " + ";
    first = false;
    os << t.c.str() << "*x^(" << rat_str_short(t.e) << ")";
  }
  return os.str();
}

PuiseuxData analyze(const Dwps& phi) {
  PuiseuxData out;
  Int d = 1; // product of pair denominators seen so far
  for (const auto& t : phi.terms()) {
    Int a = t.e.get_num(), b = t.e.get_den();
    if (b == 1 || d % b == 0) continue;
    Int g = gcd_int(d, b);
    Int pj = b / g;      // lcm(d,b)/d
    Int qj = a * (d / g);
    if (gcd_int(qj, pj) != 1)
      throw InternalInvariant("analyze: non-coprime Puiseux pair");
    out.pairs.emplace_back(qj, pj);
    out.char_exps.push_back(t.e);
    d *= pj;
  }
  out.p = to_long(d);
  if (out.p != phi.polydromy())
    throw InternalInvariant("analyze: pair product differs from polydromy");
  return out;
}

Dwps star(const FieldElem& c, long r, const Dwps& phi) {
  long p = phi.polydromy();
  if (r <= 0 || r % p != 0)
    throw InputError("star: r must be a positive multiple of the polydromy order " +
                     std::to_string(p));
  long m = r / p;
  std::vector<DwpsTerm> terms;
  for (const auto& t : phi.terms()) {
    long q = to_long(t.e * Rat(p)); // integral by definition of p
    terms.push_back({t.e, t.c * c.pow(q * m)});
  }
  return Dwps::from_terms(std::move(terms));
}

std::vector<Dwps> conjugates(const Dwps& phi) {
  long p = phi.polydromy();
  std::vector<Dwps> out;
  FieldElem z = FieldElem::zeta(static_cast<int>(p));
  for (long j = 0; j < p; ++j) out.push_back(star(z.pow(j), p, phi));
  return out;
}

bool conjugate_equal(const Dwps& phi, const Dwps& psi) {
  for (const auto& c : conjugates(phi))
    if (c == psi) return true;
  return false;
}

} // namespace semideg
