#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semideg/dwps.hpp"
#include "semideg/laurent.hpp"
#include "semideg/rat.hpp"
#include "semideg/semidegree.hpp"

namespace tst {

using namespace semideg;

inline Rat q(long num, long den = 1) { return make_rat(num, den); }

// series from (coeff, exponent) pairs, any order
inline Dwps series(std::vector<std::pair<FieldElem, Rat>> terms) {
  Dwps s;
  for (auto& [c, e] : terms) s = s + Dwps::monomial(c, e);
  return s;
}

inline Dwps xpow(const Rat& e) { return Dwps::monomial(FieldElem(1L), e); }

inline LaurentPoly2 mono(long c, long a, long b) {
  return LaurentPoly2::monomial(FieldElem(c), a, b);
}

// x^{5/2} + x^{-3/2}, r = -5/2  (S_pol, last key form y^2 - x^5 - 2x)
inline Semidegree row3() {
  return make_semidegree(series({{1, q(5, 2)}, {1, q(-3, 2)}}), q(-5, 2));
}

// x^{5/2} + x^{-1} + x^{-3/2}, r = -5/2  (not S_pol, but S_num)
inline Semidegree row4() {
  return make_semidegree(series({{1, q(5, 2)}, {1, q(-1)}, {1, q(-3, 2)}}),
                         q(-5, 2));
}

inline Semidegree deg_sd() { return make_semidegree(Dwps(), q(1)); }
inline Semidegree w23() { return make_semidegree(Dwps(), q(3, 2)); }
inline Semidegree x32(const Rat& r = make_rat(1, 2)) {
  return make_semidegree(xpow(make_rat(3, 2)), r);
}
inline Semidegree x23() { return make_semidegree(xpow(make_rat(2, 3)), q(1, 3)); }

inline std::vector<Int> iv(std::vector<long> v) { return {v.begin(), v.end()}; }

} // namespace tst
