#include "semideg/xipoly.hpp"

#include <sstream>

#include "semideg/errors.hpp"

namespace semideg {

XiPoly::XiPoly(const FieldElem& c) {
  if (!c.is_zero()) c_.push_back(c);
}

XiPoly XiPoly::monomial(const FieldElem& c, long k) {
  XiPoly f;
  if (c.is_zero()) return f;
  if (k < 0) throw InternalInvariant("negative xi exponent");
  f.c_.assign(static_cast<size_t>(k) + 1, FieldElem(0L));
  f.c_.back() = c;
  return f;
}

void XiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem XiPoly::const_val() const {
  if (!is_const()) throw InternalInvariant("const_val of non-constant XiPoly");
  return c_.empty() ? FieldElem(0L) : c_[0];
}

long XiPoly::deg() const {
  if (c_.empty()) throw InternalInvariant("deg of zero XiPoly");
  return static_cast<long>(c_.size()) - 1;
}

FieldElem XiPoly::coeff(long k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return FieldElem(0L);
  return c_[static_cast<size_t>(k)];
}

XiPoly XiPoly::operator-() const {
  XiPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

XiPoly operator+(const XiPoly& f, const XiPoly& g) {
  XiPoly out = f;
  if (g.c_.size() > out.c_.size()) out.c_.resize(g.c_.size(), FieldElem(0L));
  for (size_t i = 0; i < g.c_.size(); ++i) out.c_[i] += g.c_[i];
  out.trim();
  return out;
}

XiPoly operator-(const XiPoly& f, const XiPoly& g) { return f + (-g); }

XiPoly operator*(const XiPoly& f, const XiPoly& g) {
  XiPoly out;
  if (f.c_.empty() || g.c_.empty()) return out;
  out.c_.assign(f.c_.size() + g.c_.size() - 1, FieldElem(0L));
  for (size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].is_zero()) continue;
    for (size_t j = 0; j < g.c_.size(); ++j)
      out.c_[i + j] += f.c_[i] * g.c_[j];
  }
  out.trim();
  return out;
}

XiPoly XiPoly::scale(const FieldElem& c) const {
  if (c.is_zero()) return XiPoly();
  XiPoly out = *this;
  for (auto& v : out.c_) v = v * c;
  return out;
}

XiPoly XiPoly::pow(long e) const {
  if (e < 0) throw InternalInvariant("negative power of XiPoly");
  XiPoly acc(FieldElem(1L));
  XiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElem XiPoly::eval(const FieldElem& v) const {
  FieldElem acc(0L);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

long XiPoly::ord_at(const FieldElem& v) const {
  if (c_.empty()) throw InternalInvariant("ord_at of zero XiPoly");
  std::vector<FieldElem> cur = c_;
  long ord = 0;
  while (true) {
    // synthetic division of cur by (xi - v)
    std::vector<FieldElem> q(cur.size() > 1 ? cur.size() - 1 : 0, FieldElem(0L));
    FieldElem rem(0L);
    FieldElem carry(0L);
    for (size_t i = cur.size(); i-- > 0;) {
      FieldElem val = cur[i] + carry * v;
      if (i == 0) {
        rem = val;
      } else {
        q[i - 1] = val;
        carry = val;
      }
    }
    if (cur.size() == 1) rem = cur[0];
    if (!rem.is_zero()) return ord;
    ++ord;
    if (q.empty()) return ord; // cur was the zero remainder of a linear poly
    cur = q;
  }
}

std::string XiPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const FieldElem& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rat();
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << (i == 1 ? "xi" : "xi^" + std::to_string(i));
    }
  }
  return os.str();
}

std::optional<XiShape> xi_shape(const XiPoly& f, long m) {
  if (f.is_zero() || m <= 0) return std::nullopt;
  long s = f.ord_at(FieldElem(0L));
  // g = f / xi^s
  XiPoly g;
  for (long k = s; k <= f.deg(); ++k)
    g = g + XiPoly::monomial(f.coeff(k), k - s);
  XiShape sh;
  sh.s = s;
  sh.m = m;
  if (g.is_const()) {
    sh.unit = g.const_val();
    sh.t = 0;
    sh.c = FieldElem(0L);
    return sh;
  }
  long d = g.deg();
  if (d % m != 0) return std::nullopt;
  sh.t = d / m;
  sh.unit = g.coeff(d);
  sh.c = -(g.coeff(m * (sh.t - 1)) / (sh.unit * FieldElem(sh.t)));
  XiPoly check =
      (XiPoly::monomial(FieldElem(1L), m) - XiPoly(sh.c)).pow(sh.t).scale(sh.unit);
  XiPoly shifted;
  for (long k = 0; k <= check.deg(); ++k)
    shifted = shifted + XiPoly::monomial(check.coeff(k), k + s);
  if (shifted != f) return std::nullopt;
  return sh;
}

} // namespace semideg
