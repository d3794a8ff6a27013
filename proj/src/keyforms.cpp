#include "semideg/keyforms.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "semideg/errors.hpp"

namespace semideg {

namespace {

struct ClosedForm {
  LaurentPoly2 H;
  Rat w; // normalized value
  long jump = 1;
  FieldElem c; // leading coefficient at closing time
};

// Unique monomial x^{a0} prod H_i^{a_i} with 0 <= a_i < jump_i, a0 in Z and
// normalized value a0 + sum a_i w_i equal to target.
std::pair<LaurentPoly2, FieldElem> value_monomial(
    const std::vector<ClosedForm>& closed, const Rat& target) {
  size_t n = closed.size();
  std::vector<long> alpha(n, 0);
  std::optional<std::vector<long>> hit;
  std::optional<Int> hit_a0;
  while (true) {
    Rat rest = target;
    for (size_t i = 0; i < n; ++i) rest -= Rat(alpha[i]) * closed[i].w;
    if (rest.get_den() == 1) {
      if (hit) throw InternalInvariant("value monomial is not unique");
      hit = alpha;
      hit_a0 = Int(rest.get_num());
    }
    size_t i = 0;
    while (i < n && alpha[i] + 1 >= closed[i].jump) alpha[i++] = 0;
    if (i == n) break;
    ++alpha[i];
  }
  if (!hit) throw InternalInvariant("no monomial matches the target value");
  LaurentPoly2 M = LaurentPoly2::monomial(FieldElem(1L), to_long(*hit_a0), 0);
  FieldElem lcM(1L);
  for (size_t i = 0; i < n; ++i) {
    if ((*hit)[i] == 0) continue;
    M = M * closed[i].H.pow((*hit)[i]);
    lcM *= closed[i].c.pow((*hit)[i]);
  }
  return {M, lcM};
}

} // namespace

std::vector<LaurentPoly2> key_forms(const Semidegree& d) {
  std::vector<LaurentPoly2> forms{LaurentPoly2::var_x(), LaurentPoly2::var_y()};
  if (d.phi.is_zero()) return forms;
  FormalData fd = formal_data(d);
  std::vector<ClosedForm> closed;
  Int D = 1;
  LaurentPoly2 g = LaurentPoly2::var_y();
  for (int iter = 0; iter < 1000; ++iter) {
    EvalResult ev = eval_full(d, g);
    if (!ev.lc.is_const()) {
      if (g.deg_y() != fd.p)
        throw InternalInvariant("final key form degree differs from polydromy");
      return forms;
    }
    FieldElem c = ev.lc.const_val();
    Rat v = ev.norm;
    Rat vD = v * D;
    Int den = vD.get_den();
    if (den == 1) {
      auto [M, lcM] = value_monomial(closed, v);
      g = g - M.scale(c / lcM);
    } else {
      long dl = to_long(den);
      auto [M, lcM] = value_monomial(closed, v * den);
      closed.push_back(ClosedForm{g, v, dl, c});
      g = g.pow(dl) - M.scale(c.pow(dl) / lcM);
      D *= den;
    }
    if (g.is_zero())
      throw InternalInvariant("key form vanished during the update");
    forms.push_back(g);
  }
  throw InternalInvariant("key form computation did not terminate");
}

namespace {

// ---- roots at infinity ----

using Poly = std::vector<FieldElem>; // univariate, ascending, trimmed

void ptrim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Poly pderiv(const Poly& f) {
  Poly out;
  for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * FieldElem((long)i));
  ptrim(out);
  return out;
}

Poly pmonic(Poly f) {
  if (f.empty()) return f;
  FieldElem inv = f.back().inv();
  for (auto& c : f) c *= inv;
  return f;
}

Poly pmod(Poly a, const Poly& b) {
  // b monic
  while (a.size() >= b.size() && !b.empty()) {
    FieldElem q = a.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    a.pop_back();
    ptrim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

Poly pdiv_exact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, FieldElem(0L));
  FieldElem lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    FieldElem f = a.back() * lead_inv;
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    ptrim(a);
    if (a.empty()) break;
    if (a.size() < b.size())
      throw InternalInvariant("inexact polynomial division");
  }
  ptrim(q);
  return q;
}

Poly pgcd(Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    b = pmonic(b);
    Poly r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a);
}

FieldElem peval(const Poly& f, const FieldElem& v) {
  FieldElem acc(0L);
  for (size_t i = f.size(); i-- > 0;) acc = acc * v + f[i];
  return acc;
}

long pord_at(Poly f, const FieldElem& v) {
  long ord = 0;
  while (!f.empty() && peval(f, v).is_zero()) {
    // synthetic division by (t - v)
    Poly q(f.size() - 1, FieldElem(0L));
    FieldElem carry(0L);
    for (size_t i = f.size(); i-- > 1;) {
      carry = f[i] + carry * v;
      q[i - 1] = carry;
    }
    f = std::move(q);
    ptrim(f);
    ++ord;
  }
  return ord;
}

std::string pstr(const Poly& f, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << f[i].str() << ")";
    if (i == 1) os << "*" << var;
    if (i > 1) os << "*" << var << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// Exact roots of Q (Q(0) != 0) as (root, multiplicity); throws
// RootFieldUnsupported when the factorization escapes the supported shapes.
std::vector<std::pair<FieldElem, long>> solve_q(const Poly& q);

std::vector<std::pair<FieldElem, long>> solve_q_squarefree(const Poly& q) {
  long d = static_cast<long>(q.size()) - 1;
  std::vector<std::pair<FieldElem, long>> out;
  if (d == 1) {
    out.emplace_back(-(q[0] / q[1]), 1);
    return out;
  }
  bool binomial = true;
  for (long i = 1; i < d; ++i)
    if (!q[static_cast<size_t>(i)].is_zero()) binomial = false;
  if (binomial) {
    FieldElem base = -(q[0] / q[static_cast<size_t>(d)]);
    auto r0 = try_root(base, d);
    if (!r0)
      throw RootFieldUnsupported("cannot express the roots of " +
                                 pstr(q, "t"));
    for (long k = 0; k < d; ++k) out.emplace_back(*r0 * FieldElem::zeta(static_cast<int>(d), k), 1);
    return out;
  }
  if (d == 2) {
    FieldElem disc = q[1] * q[1] - FieldElem(4L) * q[2] * q[0];
    auto s = try_root(disc, 2);
    if (!s)
      throw RootFieldUnsupported("cannot express the roots of " +
                                 pstr(q, "t"));
    FieldElem half = FieldElem(1L) / (FieldElem(2L) * q[2]);
    out.emplace_back((-q[1] + *s) * half, 1);
    out.emplace_back((-q[1] - *s) * half, 1);
    return out;
  }
  throw RootFieldUnsupported("cannot express the roots of " + pstr(q, "t"));
}

std::vector<std::pair<FieldElem, long>> solve_q(const Poly& q) {
  long d = static_cast<long>(q.size()) - 1;
  if (d <= 0) throw InternalInvariant("edge polynomial has no roots");
  // perfect power q_d (t - t0)^d
  if (d >= 2) {
    FieldElem t0 = -(q[static_cast<size_t>(d) - 1] /
                     (FieldElem(d) * q[static_cast<size_t>(d)]));
    if (!t0.is_zero()) {
      Poly pw{-t0, FieldElem(1L)};
      Poly acc{FieldElem(1L)};
      for (long i = 0; i < d; ++i) {
        Poly next(acc.size() + 1, FieldElem(0L));
        for (size_t j = 0; j < acc.size(); ++j) {
          next[j] += acc[j] * pw[0];
          next[j + 1] += acc[j];
        }
        acc = std::move(next);
      }
      bool match = true;
      for (size_t j = 0; j < acc.size(); ++j)
        if (q[j] != acc[j] * q.back()) match = false;
      if (match) return {{t0, d}};
    }
  }
  Poly w = pgcd(q, pderiv(q));
  if (w.size() <= 1) return solve_q_squarefree(q);
  Poly s = pdiv_exact(q, w);
  auto roots = solve_q_squarefree(pmonic(s));
  long total = 0;
  std::vector<std::pair<FieldElem, long>> out;
  for (const auto& [t, one] : roots) {
    long m = 1 + pord_at(w, t);
    out.emplace_back(t, m);
    total += m;
  }
  if (total != d)
    throw InternalInvariant("squarefree split lost roots of the edge polynomial");
  return out;
}

struct YPoly {
  std::vector<Dwps> a; // a[b] = coefficient of y^b
};

YPoly shift_prefix(const YPoly& f, const FieldElem& c, const Rat& e) {
  // y -> y + c x^e
  long d = static_cast<long>(f.a.size()) - 1;
  YPoly out;
  out.a.assign(f.a.size(), Dwps());
  for (long b = 0; b <= d; ++b) {
    if (f.a[static_cast<size_t>(b)].is_zero()) continue;
    Int binom = 1;
    for (long j = b; j >= 0; --j) {
      // binom = C(b, j)
      long k = b - j;
      Dwps term = f.a[static_cast<size_t>(b)]
                      .scale(c.pow(k) * FieldElem(Rat(binom)))
                      .shift(Rat(k) * e);
      out.a[static_cast<size_t>(j)] = out.a[static_cast<size_t>(j)] + term;
      binom = binom * j / (k + 1); // C(b, j-1)
    }
  }
  while (!out.a.empty() && out.a.back().is_zero()) out.a.pop_back();
  return out;
}

struct RawRoot {
  Dwps psi;
  long mult = 1;
  bool exact = true;
};

void follow(YPoly f, const std::optional<Rat>& hi, const Rat& depth,
            const Dwps& prefix, long expected, std::vector<RawRoot>& out) {
  while (!f.a.empty() && f.a.back().is_zero()) f.a.pop_back();
  if (f.a.empty()) throw InternalInvariant("zero polynomial while following roots");
  long count = 0;
  size_t k = 0;
  while (k < f.a.size() && f.a[k].is_zero()) ++k;
  if (k > 0) {
    out.push_back(RawRoot{prefix, static_cast<long>(k), true});
    count += static_cast<long>(k);
    f.a.erase(f.a.begin(), f.a.begin() + static_cast<long>(k));
  }
  long d = static_cast<long>(f.a.size()) - 1;
  if (d >= 1) {
    // upper hull of (b, deg a_b)
    std::vector<std::pair<long, Rat>> pts;
    for (long b = 0; b <= d; ++b)
      if (!f.a[static_cast<size_t>(b)].is_zero())
        pts.emplace_back(b, *f.a[static_cast<size_t>(b)].deg());
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& p : pts) {
      while (hull.size() >= 2) {
        const auto& p1 = hull[hull.size() - 2];
        const auto& p2 = hull.back();
        // keep strictly concave: slope(p1,p2) > slope(p1,p)
        Rat lhs = (p2.second - p1.second) * (p.first - p1.first);
        Rat rhs = (p.second - p1.second) * (p2.first - p1.first);
        if (lhs <= rhs)
          hull.pop_back();
        else
          break;
      }
      hull.push_back(p);
    }
    long truncated = 0;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
      long b1 = hull[i].first, b2 = hull[i + 1].first;
      Rat d1 = hull[i].second, d2 = hull[i + 1].second;
      Rat e = (d1 - d2) / Rat(b2 - b1);
      if (hi && !(e < *hi)) continue;
      long width = b2 - b1;
      if (e < depth) {
        truncated += width;
        continue;
      }
      Rat w0 = d1 + e * b1; // common value along the edge
      Poly edge(static_cast<size_t>(width) + 1, FieldElem(0L));
      for (long b = b1; b <= b2; ++b)
        edge[static_cast<size_t>(b - b1)] =
            f.a[static_cast<size_t>(b)].coeff_at(w0 - e * b);
      // strip the exponent gcd so the accepted shapes are recognized
      long gj = 0;
      for (long j = 1; j <= width; ++j)
        if (!edge[static_cast<size_t>(j)].is_zero())
          gj = to_long(gcd_int(gj, j));
      if (gj == 0) throw InternalInvariant("degenerate edge polynomial");
      Poly q(static_cast<size_t>(width / gj) + 1, FieldElem(0L));
      for (long j = 0; j * gj <= width; ++j)
        q[static_cast<size_t>(j)] = edge[static_cast<size_t>(j * gj)];
      long found = 0;
      for (const auto& [t0, mu] : solve_q(q)) {
        auto c0 = try_root(t0, gj);
        if (!c0)
          throw RootFieldUnsupported("cannot express the roots of " +
                                     pstr(edge, "c"));
        for (long j = 0; j < gj; ++j) {
          FieldElem c = *c0 * FieldElem::zeta(static_cast<int>(gj), j);
          YPoly g = shift_prefix(f, c, e);
          follow(g, e, depth, prefix + Dwps::monomial(c, e), mu, out);
          found += mu;
        }
      }
      if (found != width)
        throw InternalInvariant("edge roots do not fill the edge width");
      count += width;
    }
    if (truncated > 0) {
      out.push_back(RawRoot{prefix, truncated, false});
      count += truncated;
    }
  }
  if (expected >= 0 && count != expected)
    throw InternalInvariant("root count mismatch while following an edge");
}

} // namespace

std::vector<RootClass> dwps_roots(const LaurentPoly2& f, const Rat& depth) {
  if (f.is_zero() || f.deg_y() < 1)
    throw InputError("roots require a nonzero polynomial of positive y-degree");
  long d = f.deg_y();
  if (f.coeff_y(d).size() != 1)
    throw InputError("leading y-coefficient must be a monomial");
  YPoly yp;
  yp.a.assign(static_cast<size_t>(d) + 1, Dwps());
  for (const auto& [key, c] : f.terms()) {
    std::vector<DwpsTerm> one{DwpsTerm{Rat(key.first), c}};
    yp.a[static_cast<size_t>(key.second)] =
        yp.a[static_cast<size_t>(key.second)] + Dwps::from_terms(one);
  }
  std::vector<RawRoot> raw;
  follow(yp, std::nullopt, depth, Dwps(), d, raw);

  // post-hoc verification
  for (const auto& r : raw) {
    Dwps plain = subst_series(f, r.psi);
    if (r.exact) {
      if (!plain.is_zero())
        throw InternalInvariant("exact root fails resubstitution");
    } else {
      Rat ecut = depth;
      if (!r.psi.is_zero() && !(ecut < r.psi.low())) ecut = r.psi.low() - 1;
      XiSeries s = substitute(Semidegree{r.psi, ecut}, f);
      if (s.empty())
        throw InternalInvariant("truncated root annihilates the polynomial");
      Rat top = s.rbegin()->first;
      if (plain.deg() && !(*plain.deg() < top))
        throw InternalInvariant("truncated root fails the degree drop check");
    }
  }

  // conjugacy classes
  std::vector<RootClass> classes;
  std::vector<bool> used(raw.size(), false);
  long total = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    RootClass cl;
    cl.rep = raw[i].psi;
    cl.mult = raw[i].mult;
    cl.size = 1;
    cl.exact = raw[i].exact;
    for (size_t j = i + 1; j < raw.size(); ++j) {
      if (used[j]) continue;
      if (conjugate_equal(raw[i].psi, raw[j].psi)) {
        if (raw[j].mult != cl.mult || raw[j].exact != cl.exact)
          throw InternalInvariant("conjugate roots disagree in multiplicity");
        used[j] = true;
        ++cl.size;
      }
    }
    if (cl.exact && cl.size != cl.rep.polydromy())
      throw InternalInvariant("exact class size differs from the polydromy");
    total += cl.size * cl.mult;
    classes.push_back(std::move(cl));
  }
  if (total != d)
    throw InternalInvariant("root multiplicities do not sum to the y-degree");
  return classes;
}

SurfaceClass classify(const std::vector<Semidegree>& ds) {
  SurfaceClass out;
  out.in_s_pol = true;
  out.in_s_num = true;
  bool all_nonneg = true;
  for (const auto& d : ds) {
    std::vector<LaurentPoly2> kf = key_forms(d);
    const LaurentPoly2& last = kf.back();
    bool poly = last.is_polynomial();
    std::optional<Int> v = eval(d, last);
    bool nonneg = v && *v >= 0;
    if (!poly) out.in_s_pol = false;
    if (!poly && !nonneg) out.in_s_num = false;
    if (!nonneg) all_nonneg = false;
  }
  out.in_s_pol_plus = out.in_s_pol && all_nonneg;
  return out;
}

} // namespace semideg
