#include "semideg/semidegree.hpp"

#include <sstream>

#include "semideg/errors.hpp"

namespace semideg {

Semidegree make_semidegree(const Dwps& phi, const Rat& r) {
  for (const auto& t : phi.terms())
    if (!(t.e > r))
      throw InputError("semidegree radius " + rat_str_short(r) +
                       " is not below every exponent of the center");
  return Semidegree{phi, r};
}

Semidegree truncated_semidegree(const Dwps& phi, const Rat& r) {
  return Semidegree{phi.truncate_above(r), r};
}

bool operator==(const Semidegree& a, const Semidegree& b) {
  return a.r == b.r && a.phi == b.phi;
}

FormalData formal_data(const Semidegree& d) {
  FormalData fd;
  PuiseuxData pd = analyze(d.phi);
  fd.p = pd.p;
  fd.pairs = pd.pairs;
  fd.l = static_cast<long>(pd.pairs.size());
  Rat rp = d.r * fd.p; // already canonical
  fd.pairs.emplace_back(Int(rp.get_num()), Int(rp.get_den()));
  fd.p_last = to_long(Int(rp.get_den()));
  fd.p_tilde = fd.p * fd.p_last;
  return fd;
}

namespace {

XiSeries series_mul(const XiSeries& a, const XiSeries& b) {
  XiSeries out;
  for (const auto& [ea, fa] : a)
    for (const auto& [eb, fb] : b) {
      XiPoly prod = fa * fb;
      if (prod.is_zero()) continue;
      auto it = out.find(ea + eb);
      if (it == out.end()) {
        out.emplace(ea + eb, prod);
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

} // namespace

XiSeries substitute(const Semidegree& d, const LaurentPoly2& f) {
  XiSeries base; // phi + xi x^r
  for (const auto& t : d.phi.terms()) base.emplace(t.e, XiPoly(t.c));
  base.emplace(d.r, XiPoly::xi());
  long dy = f.is_zero() ? 0 : f.deg_y();
  std::vector<XiSeries> pw(static_cast<size_t>(dy) + 1);
  pw[0].emplace(Rat(0), XiPoly(FieldElem(1L)));
  for (long b = 1; b <= dy; ++b)
    pw[b] = series_mul(pw[b - 1], base);
  XiSeries acc;
  for (const auto& [k, c] : f.terms()) {
    for (const auto& [e, xp] : pw[k.second]) {
      Rat ex = e + k.first;
      XiPoly term = xp.scale(c);
      if (term.is_zero()) continue;
      auto it = acc.find(ex);
      if (it == acc.end()) {
        acc.emplace(ex, term);
      } else {
        it->second = it->second + term;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return acc;
}

EvalResult eval_full(const Semidegree& d, const LaurentPoly2& f) {
  EvalResult res;
  if (f.is_zero()) return res;
  XiSeries s = substitute(d, f);
  if (s.empty())
    throw InternalInvariant("substitution of a nonzero polynomial vanished");
  FormalData fd = formal_data(d);
  auto top = s.rbegin();
  res.norm = top->first;
  Rat v = res.norm * fd.p_tilde;
  if (v.get_den() != 1)
    throw InternalInvariant("semidegree value is not an integer");
  res.value = Int(v.get_num());
  res.lc = top->second;
  // leading coefficient has the shape xi^s h(xi^{p_last})
  long s0 = res.lc.ord_at(FieldElem(0L));
  for (long k = s0; k <= res.lc.deg(); ++k)
    if (!res.lc.coeff(k).is_zero() && (k - s0) % fd.p_last != 0)
      throw InternalInvariant("leading coefficient violates the xi-power shape");
  return res;
}

std::optional<Int> eval(const Semidegree& d, const LaurentPoly2& f) {
  return eval_full(d, f).value;
}

XiPoly lc(const Semidegree& d, const LaurentPoly2& f) {
  return eval_full(d, f).lc;
}

std::string semidegree_str(const Semidegree& d) {
  std::ostringstream os;
  os << "(" << d.phi.str() << ", " << rat_str_short(d.r) << ")";
  return os.str();
}

} // namespace semideg
