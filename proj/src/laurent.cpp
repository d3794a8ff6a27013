#include "semideg/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "semideg/errors.hpp"

namespace semideg {

LaurentPoly2 LaurentPoly2::monomial(const FieldElem& c, long a, long b) {
  LaurentPoly2 f;
  f.add_term(a, b, c);
  return f;
}

void LaurentPoly2::add_term(long a, long b, const FieldElem& c) {
  if (c.is_zero()) return;
  if (b < 0) throw InternalInvariant("negative y exponent in LaurentPoly2");
  auto key = Key{a, b};
  auto it = m_.find(key);
  if (it == m_.end()) {
    m_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m_.erase(it);
  }
}

bool LaurentPoly2::is_polynomial() const {
  for (const auto& [k, c] : m_)
    if (k.first < 0) return false;
  return true;
}

long LaurentPoly2::deg_y() const {
  if (m_.empty()) throw InternalInvariant("deg_y of zero");
  long d = 0;
  for (const auto& [k, c] : m_) d = std::max(d, k.second);
  return d;
}

long LaurentPoly2::total_deg() const {
  if (m_.empty() || !is_polynomial())
    throw InternalInvariant("total_deg needs a nonzero polynomial");
  long d = 0;
  for (const auto& [k, c] : m_) d = std::max(d, k.first + k.second);
  return d;
}

std::map<long, FieldElem> LaurentPoly2::coeff_y(long b) const {
  std::map<long, FieldElem> out;
  for (const auto& [k, c] : m_)
    if (k.second == b) out.emplace(k.first, c);
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out;
  for (const auto& [k, c] : m_) out.m_.emplace(k, -c);
  return out;
}

LaurentPoly2 operator+(const LaurentPoly2& f, const LaurentPoly2& g) {
  LaurentPoly2 out = f;
  for (const auto& [k, c] : g.m_) out.add_term(k.first, k.second, c);
  return out;
}

LaurentPoly2 operator-(const LaurentPoly2& f, const LaurentPoly2& g) {
  LaurentPoly2 out = f;
  for (const auto& [k, c] : g.m_) out.add_term(k.first, k.second, -c);
  return out;
}

LaurentPoly2 operator*(const LaurentPoly2& f, const LaurentPoly2& g) {
  LaurentPoly2 out;
  for (const auto& [kf, cf] : f.m_)
    for (const auto& [kg, cg] : g.m_)
      out.add_term(kf.first + kg.first, kf.second + kg.second, cf * cg);
  return out;
}

LaurentPoly2 LaurentPoly2::scale(const FieldElem& c) const {
  LaurentPoly2 out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : m_) out.m_.emplace(k, v * c);
  return out;
}

LaurentPoly2 LaurentPoly2::pow(long e) const {
  if (e < 0) throw InternalInvariant("negative power of LaurentPoly2");
  LaurentPoly2 acc = one();
  LaurentPoly2 base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string LaurentPoly2::str() const {
  if (m_.empty()) return "0";
  // print in descending (y, x) order so the leading y term comes first
  std::vector<std::pair<Key, FieldElem>> ts(m_.begin(), m_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& u, const auto& v) {
    if (u.first.second != v.first.second) return u.first.second > v.first.second;
    return u.first.first > v.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rat();
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    std::vector<std::string> parts;
    if (cs != "1" || (k.first == 0 && k.second == 0)) parts.push_back(cs);
    if (k.first != 0)
      parts.push_back(k.first == 1 ? "x" : "x^" + std::to_string(k.first));
    if (k.second != 0)
      parts.push_back(k.second == 1 ? "y" : "y^" + std::to_string(k.second));
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "*";
      os << parts[i];
    }
  }
  return os.str();
}

LaurentPoly2 minpoly(const Dwps& phi) {
  // expand prod_j (y - phi_j) as a y-polynomial with Dwps coefficients
  std::vector<Dwps> conj = conjugates(phi);
  std::vector<Dwps> coef{Dwps::monomial(FieldElem(1L), Rat(0))}; // constant 1
  for (const Dwps& c : conj) {
    std::vector<Dwps> next(coef.size() + 1);
    for (size_t k = 0; k < coef.size(); ++k) {
      next[k + 1] = next[k + 1] + coef[k];
      next[k] = next[k] - coef[k] * c;
    }
    coef = std::move(next);
  }
  LaurentPoly2 out;
  for (size_t b = 0; b < coef.size(); ++b) {
    for (const auto& t : coef[b].terms()) {
      if (t.e.get_den() != 1)
        throw InternalInvariant("minpoly produced a fractional x exponent");
      out.add_term(to_long(Int(t.e.get_num())), static_cast<long>(b), t.c);
    }
  }
  return out;
}

Dwps subst_series(const LaurentPoly2& f, const Dwps& psi) {
  // powers of psi, computed once
  long dy = f.is_zero() ? 0 : f.deg_y();
  std::vector<Dwps> pw(static_cast<size_t>(dy) + 1);
  pw[0] = Dwps::monomial(FieldElem(1L), Rat(0));
  for (long b = 1; b <= dy; ++b) pw[b] = pw[b - 1] * psi;
  Dwps acc;
  for (const auto& [k, c] : f.terms())
    acc = acc + pw[k.second].scale(c).shift(Rat(k.first));
  return acc;
}

} // namespace semideg
