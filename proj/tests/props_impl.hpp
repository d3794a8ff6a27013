#pragma once

// The six randomized property suites, shared between the unit runner and the
// acceptance binary. Each suite runs `cases` rounds off a fixed seed and
// returns the number of failing rounds (0 expected).

#include <algorithm>
#include <random>
#include <vector>

#include "semideg/dwps.hpp"
#include "semideg/laurent.hpp"
#include "semideg/semidegree.hpp"

namespace props {

using namespace semideg;

struct Rng {
  std::mt19937 g;
  explicit Rng(unsigned seed) : g(seed) {}
  long i(long lo, long hi) { // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(g);
  }
};

inline FieldElem coeff(Rng& r, bool allow_cyc) {
  switch (r.i(0, allow_cyc ? 9 : 7)) {
    case 0: return FieldElem(1L);
    case 1: return FieldElem(-1L);
    case 2: return FieldElem(2L);
    case 3: return FieldElem(-3L);
    case 4: return FieldElem(make_rat(1, 2));
    case 5: return FieldElem(make_rat(-2, 3));
    case 6: return FieldElem(5L);
    case 7: return FieldElem(make_rat(7, 4));
    case 8: return FieldElem::zeta(3);
    default: return FieldElem::zeta(4) + FieldElem(1L);
  }
}

// nonzero series with polydromy dividing den, exponents descending from a
// random start; may be dense or sparse
inline Dwps rand_series(Rng& r, long den, long max_terms, bool allow_cyc) {
  long k = r.i(1, max_terms);
  Dwps s;
  long num = r.i(-4, 7);
  for (long t = 0; t < k; ++t) {
    s = s + Dwps::monomial(coeff(r, allow_cyc), make_rat(num, den));
    num -= r.i(1, 3);
  }
  return s;
}

inline Semidegree rand_sd(Rng& r, bool allow_cyc = false) {
  Dwps phi = r.i(0, 4) == 0 ? Dwps() : rand_series(r, r.i(1, 3), 3, allow_cyc);
  Rat low = phi.is_zero() ? make_rat(r.i(-2, 4)) : phi.low();
  Rat rr = low - make_rat(r.i(1, 5), r.i(1, 3));
  return make_semidegree(phi, rr);
}

inline LaurentPoly2 rand_poly(Rng& r, bool laurent, bool allow_cyc) {
  LaurentPoly2 f;
  long k = r.i(1, 4);
  for (long t = 0; t < k; ++t)
    f = f + LaurentPoly2::monomial(coeff(r, allow_cyc), r.i(laurent ? -3 : 0, 4),
                                   r.i(0, 3));
  return f;
}

// star-operator composition: c *_{pde} phi = c^e *_{pd} phi = c^{de} *_p phi
inline long suite_star(long cases, unsigned seed) {
  Rng r(seed);
  long bad = 0;
  for (long n = 0; n < cases; ++n) {
    Dwps phi = rand_series(r, r.i(1, 4), 4, true);
    long p = phi.polydromy();
    long d = r.i(1, 3), e = r.i(1, 3);
    FieldElem c = coeff(r, true);
    bool ok = star(c, p * d * e, phi) == star(c.pow(e), p * d, phi) &&
              star(c, p * d * e, phi) == star(c.pow(d * e), p, phi);
    if (!ok) ++bad;
  }
  return bad;
}

// Puiseux pairs are conjugacy invariants
inline long suite_conjugacy(long cases, unsigned seed) {
  Rng r(seed);
  long bad = 0;
  for (long n = 0; n < cases; ++n) {
    Dwps phi = rand_series(r, r.i(1, 4), 4, false);
    auto base = analyze(phi);
    for (const auto& conj : conjugates(phi)) {
      auto other = analyze(conj);
      if (other.p != base.p || other.pairs != base.pairs ||
          other.char_exps != base.char_exps) {
        ++bad;
        break;
      }
    }
  }
  return bad;
}

// delta(fg) = delta(f) + delta(g), lc(fg) = lc(f) lc(g),
// delta(f+g) <= max with equality when the values differ
inline long suite_multiplicative(long cases, unsigned seed) {
  Rng r(seed);
  long bad = 0;
  for (long n = 0; n < cases; ++n) {
    Semidegree d = rand_sd(r);
    LaurentPoly2 f = rand_poly(r, true, false), g = rand_poly(r, true, false);
    auto rf = eval_full(d, f), rg = eval_full(d, g), rp = eval_full(d, f * g);
    bool ok = *rp.value == *rf.value + *rg.value && rp.lc == rf.lc * rg.lc;
    LaurentPoly2 s = f + g;
    if (!s.is_zero()) {
      auto vs = eval(d, s);
      Int mx = std::max(*rf.value, *rg.value);
      ok = ok && *vs <= mx && (*rf.value == *rg.value || *vs == mx);
    }
    if (!ok) ++bad;
  }
  return bad;
}

// lc factors as xi^s * h(xi^{p_last})
inline long suite_lc_shape(long cases, unsigned seed) {
  Rng r(seed);
  long bad = 0;
  for (long n = 0; n < cases; ++n) {
    Semidegree d = rand_sd(r);
    long p_last = formal_data(d).p_last;
    XiPoly l = lc(d, rand_poly(r, true, false));
    long s = 0;
    while (l.coeff(s).is_zero()) ++s;
    for (long k = s; k <= l.deg(); ++k)
      if (!l.coeff(k).is_zero() && (k - s) % p_last != 0) {
        ++bad;
        break;
      }
  }
  return bad;
}

// monotonicity of the normalized value in the contact order
inline long suite_comparison(long cases, unsigned seed) {
  Rng r(seed);
  long bad = 0;
  auto contact = [](const Semidegree& d, const Dwps& psi) {
    Rat eps = d.r; // the generic term never cancels, so eps >= r always
    bool first = true;
    for (const auto& conj : conjugates(psi)) {
      Dwps diff = d.phi - conj;
      Rat e = diff.is_zero() ? d.r : std::max(*diff.deg(), d.r);
      if (first || e < eps) eps = e;
      first = false;
    }
    return eps;
  };
  for (long n = 0; n < cases; ++n) {
    Semidegree d = rand_sd(r);
    Dwps psi1 = r.i(0, 9) == 0 ? Dwps() : rand_series(r, r.i(1, 3), 3, false);
    Dwps psi2 = r.i(0, 9) == 0 ? Dwps() : rand_series(r, r.i(1, 3), 3, false);
    if (contact(d, psi1) < contact(d, psi2)) std::swap(psi1, psi2);
    LaurentPoly2 g1 = minpoly(psi1), g2 = minpoly(psi2);
    Rat v1 = make_rat(*eval(d, g1), Int(g1.deg_y()));
    Rat v2 = make_rat(*eval(d, g2), Int(g2.deg_y()));
    if (!(v1 >= v2)) ++bad;
  }
  return bad;
}

// minpoly(phi) vanishes on every conjugate of phi
inline long suite_resubstitution(long cases, unsigned seed) {
  Rng r(seed);
  long bad = 0;
  for (long n = 0; n < cases; ++n) {
    Dwps phi = rand_series(r, r.i(1, 4), 3, false);
    LaurentPoly2 m = minpoly(phi);
    for (const auto& conj : conjugates(phi))
      if (!subst_series(m, conj).is_zero()) {
        ++bad;
        break;
      }
  }
  return bad;
}

} // namespace props
