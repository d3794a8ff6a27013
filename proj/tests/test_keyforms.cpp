#include <doctest.h>

#include "semideg/keyforms.hpp"

#include "common.hpp"

using namespace semideg;
using tst::mono;
using tst::q;
using tst::series;
using tst::xpow;

namespace {

LaurentPoly2 y2x5() { return mono(1, 0, 2) - mono(1, 5, 0); }

} // namespace

TEST_CASE("key forms: degree-like semidegrees stop at y") {
  auto kf = key_forms(tst::deg_sd());
  REQUIRE(kf.size() == 2);
  CHECK(kf[0] == LaurentPoly2::var_x());
  CHECK(kf[1] == LaurentPoly2::var_y());
  CHECK(key_forms(tst::w23()).size() == 2);
  CHECK(key_forms(make_semidegree(Dwps(), q(-2))).size() == 2);
}

TEST_CASE("key forms: one-pair series give the binomial form") {
  // phi = c x^{5/2}: last form y^2 - c^2 x^5, for rational and cyclotomic c
  for (FieldElem c : {FieldElem(1L), FieldElem(q(3, 7)), FieldElem::zeta(3)}) {
    auto kf = key_forms(make_semidegree(xpow(q(5, 2)).scale(c), q(-5, 2)));
    REQUIRE(kf.size() == 3);
    CHECK(kf[2] == mono(1, 0, 2) - LaurentPoly2::monomial(c * c, 5, 0));
  }
  auto kf = key_forms(tst::x23());
  REQUIRE(kf.size() == 3);
  CHECK(kf[2] == mono(1, 0, 3) - mono(1, 2, 0)); // y^3 - x^2
}

TEST_CASE("key forms: row 3") {
  auto kf = key_forms(tst::row3());
  REQUIRE(kf.size() == 4);
  CHECK(kf[0] == LaurentPoly2::var_x());
  CHECK(kf[1] == LaurentPoly2::var_y());
  CHECK(kf[2] == y2x5());
  CHECK(kf[3] == y2x5() - mono(2, 1, 0));
  for (const auto& f : kf) CHECK(f.is_polynomial());
}

TEST_CASE("key forms: row 4 leaves the polynomial ring") {
  auto kf = key_forms(tst::row4());
  REQUIRE(kf.size() == 5);
  CHECK(kf[2] == y2x5());
  CHECK(kf[3] == y2x5() - mono(2, -1, 1));
  CHECK(kf[4] == y2x5() - mono(2, -1, 1) - mono(2, 1, 0));
  CHECK_FALSE(kf[4].is_polynomial());
}

TEST_CASE("key forms: deg_y ladder divides the polydromy") {
  for (const Semidegree& d :
       {tst::row3(), tst::row4(), tst::x32(), tst::x23(),
        make_semidegree(series({{1, q(5, 2)}, {1, q(-7, 4)}}), q(-3))}) {
    auto kf = key_forms(d);
    long p = d.phi.polydromy();
    CHECK(kf.back().deg_y() == p);
    long prev = 0;
    for (size_t k = 1; k < kf.size(); ++k) {
      long dy = kf[k].deg_y();
      CHECK(dy >= prev);
      CHECK(p % dy == 0);
      prev = dy;
    }
  }
}

TEST_CASE("classification of the worked examples") {
  auto c3 = classify({tst::row3()});
  CHECK(c3.in_s_pol);
  CHECK(c3.in_s_num);
  CHECK(c3.in_s_pol_plus); // last value 0 >= 0

  auto c4 = classify({tst::row4()});
  CHECK_FALSE(c4.in_s_pol);
  CHECK(c4.in_s_num); // delta of last form is 0
  CHECK_FALSE(c4.in_s_pol_plus);

  auto cneg = classify({make_semidegree(xpow(q(-1, 2)), q(-1))});
  CHECK_FALSE(cneg.in_s_pol);
  CHECK_FALSE(cneg.in_s_num); // negative value on the last form

  auto cd = classify({tst::deg_sd()});
  CHECK(cd.in_s_pol_plus);
}

TEST_CASE("delta of the last key forms") {
  CHECK(*eval(tst::row3(), key_forms(tst::row3()).back()) == 0);
  CHECK(*eval(tst::row4(), key_forms(tst::row4()).back()) == 0);
  Semidegree neg = make_semidegree(xpow(q(-1, 2)), q(-1));
  CHECK(*eval(neg, key_forms(neg).back()) < 0);
}

TEST_CASE("dwps_roots: binomial") {
  auto rc = dwps_roots(y2x5(), q(-10));
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].rep == xpow(q(5, 2)));
  CHECK(rc[0].size == 2);
  CHECK(rc[0].mult == 1);
  CHECK(rc[0].exact);
}

TEST_CASE("dwps_roots: expansion of the row-3 curvette") {
  auto rc = dwps_roots(y2x5() - mono(2, 1, 0), q(-6));
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].rep ==
        series({{1, q(5, 2)}, {1, q(-3, 2)}, {FieldElem(q(-1, 2)), q(-11, 2)}}));
  CHECK(rc[0].size == 2);
  CHECK_FALSE(rc[0].exact);
  // truncating at the row-3 radius recovers phi above r
  CHECK(rc[0].rep.truncate_above(q(-5, 2)) == series({{1, q(5, 2)}, {1, q(-3, 2)}}));
}

TEST_CASE("dwps_roots: linear and multiple roots") {
  auto rc = dwps_roots(mono(1, 0, 1) - mono(1, 1, 0), q(-4)); // y - x
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].rep == xpow(q(1)));
  CHECK(rc[0].exact);

  auto sq = dwps_roots((mono(1, 0, 1) - mono(1, 1, 0)) *
                           (mono(1, 0, 1) - mono(1, 1, 0)),
                       q(-4));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].mult == 2);
}

TEST_CASE("dwps_roots on a minpoly returns the conjugacy class") {
  for (const Dwps& phi : {series({{1, q(5, 2)}, {1, q(-3, 2)}}),
                          series({{1, q(2, 3)}, {2, q(1, 3)}})}) {
    auto rc = dwps_roots(minpoly(phi), phi.low() - 1);
    REQUIRE(rc.size() == 1);
    CHECK(conjugate_equal(rc[0].rep, phi));
    CHECK(rc[0].size == phi.polydromy());
    CHECK(rc[0].exact);
  }
}

TEST_CASE("dwps_roots: root-field policy rejects non-cyclotomic leads") {
  // y^2 - 2x^2 needs sqrt(2)
  CHECK_THROWS_AS(dwps_roots(mono(1, 0, 2) - mono(2, 2, 0), q(-4)),
                  RootFieldUnsupported);
}
