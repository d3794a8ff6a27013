#include <doctest.h>

#include "semideg/dwps.hpp"
#include "semideg/laurent.hpp"

#include "common.hpp"

using namespace semideg;
using tst::q;
using tst::series;
using tst::xpow;

TEST_CASE("degree and polydromy basics") {
  Dwps z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.deg().has_value()); // deg(0) = -infinity
  CHECK(z.polydromy() == 1);

  Dwps phi = series({{1, q(5, 2)}, {1, q(-3, 2)}});
  CHECK(*phi.deg() == q(5, 2));
  CHECK(phi.low() == q(-3, 2));
  CHECK(phi.polydromy() == 2);
  // polydromy is recomputed from the exponents actually present
  Dwps even = series({{1, q(3)}, {1, q(-1)}});
  CHECK(even.polydromy() == 1);
}

TEST_CASE("analyze: Puiseux pairs") {
  auto a = analyze(series({{1, q(5, 2)}, {1, q(-3, 2)}}));
  CHECK(a.p == 2);
  REQUIRE(a.pairs.size() == 1);
  CHECK(a.pairs[0] == std::make_pair(Int(5), Int(2)));
  REQUIRE(a.char_exps.size() == 1);
  CHECK(a.char_exps[0] == q(5, 2));

  auto b = analyze(Dwps());
  CHECK(b.p == 1);
  CHECK(b.pairs.empty());

  auto c = analyze(series({{1, q(5, 2)}, {1, q(-7, 4)}}));
  CHECK(c.p == 4);
  REQUIRE(c.pairs.size() == 2);
  CHECK(c.pairs[0] == std::make_pair(Int(5), Int(2)));
  CHECK(c.pairs[1] == std::make_pair(Int(-7), Int(2)));
  CHECK(c.char_exps == std::vector<Rat>{q(5, 2), q(-7, 4)});

  // an exponent already on the lattice is not characteristic
  auto d = analyze(series({{1, q(2, 3)}, {1, q(1, 3)}}));
  CHECK(d.p == 3);
  REQUIRE(d.pairs.size() == 1);
  CHECK(d.pairs[0] == std::make_pair(Int(2), Int(3)));
}

TEST_CASE("conjugates") {
  Dwps phi = series({{1, q(5, 2)}, {1, q(-3, 2)}});
  auto cs = conjugates(phi);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == phi);
  CHECK(cs[1] == -phi); // both exponents odd over denominator 2

  Dwps mixed = series({{1, q(3, 2)}, {1, q(-1)}});
  auto cm = conjugates(mixed);
  REQUIRE(cm.size() == 2);
  CHECK(cm[1] == series({{-1, q(3, 2)}, {1, q(-1)}})); // x^{-1} fixed: q even

  Dwps whole = series({{2, q(3)}});
  CHECK(conjugates(whole).size() == 1);

  CHECK(conjugate_equal(phi, -phi));
  CHECK_FALSE(conjugate_equal(phi, mixed));
}

TEST_CASE("star operator") {
  FieldElem c = FieldElem(q(3));
  Dwps phi = xpow(q(5, 2));
  CHECK(star(c, 2, phi) == phi.scale(c.pow(5)));        // q=5, r/p=1
  CHECK(star(FieldElem(1L), 4, phi) == phi);            // identity
  CHECK(star(c, 6, phi) == star(c.pow(3), 2, phi));     // c *_{pde} = c^e *_{pd}
  CHECK_THROWS_AS(star(c, 3, phi), Error);              // 3 not a multiple of 2
}

TEST_CASE("truncation") {
  Dwps phi = series({{1, q(5, 2)}, {1, q(-1)}, {1, q(-3, 2)}});
  CHECK(phi.truncate_above(q(-1)) == xpow(q(5, 2)));
  CHECK(phi.truncate_above(*phi.deg()).is_zero());
  CHECK(phi.truncate_geq(q(-1)) == series({{1, q(5, 2)}, {1, q(-1)}}));
  CHECK(series({{1, q(5, 2)}, {1, q(-3, 2)}}).truncate_above(q(-3, 2)) ==
        xpow(q(5, 2)));
}

TEST_CASE("minpoly") {
  LaurentPoly2 m1 = minpoly(xpow(q(5, 2)));
  CHECK(m1 == tst::mono(1, 0, 2) - tst::mono(1, 5, 0)); // y^2 - x^5
  CHECK(m1.is_polynomial());

  LaurentPoly2 m2 = minpoly(xpow(q(-1)));
  CHECK(m2 == tst::mono(1, 0, 1) - tst::mono(1, -1, 0)); // y - x^{-1}
  CHECK_FALSE(m2.is_polynomial());

  LaurentPoly2 m3 = minpoly(series({{1, q(5, 2)}, {1, q(-3, 2)}}));
  // y^2 - x^5 - 2x - x^{-3}
  CHECK(m3 == tst::mono(1, 0, 2) - tst::mono(1, 5, 0) - tst::mono(2, 1, 0) -
                  tst::mono(1, -3, 0));
  CHECK_FALSE(m3.is_polynomial());
}

TEST_CASE("minpoly resubstitution vanishes on every conjugate") {
  Dwps phi = series({{1, q(5, 2)}, {2, q(1, 2)}, {1, q(-3, 2)}});
  LaurentPoly2 m = minpoly(phi);
  for (const auto& c : conjugates(phi)) CHECK(subst_series(m, c).is_zero());
}

TEST_CASE("laurent poly basics") {
  LaurentPoly2 f = tst::mono(1, 2, 1) + tst::mono(-3, 0, 0);
  CHECK(f.is_polynomial());
  CHECK(f.deg_y() == 1);
  CHECK(f.total_deg() == 3);
  CHECK((f - f).is_zero());
  LaurentPoly2 g = tst::mono(1, -2, 3);
  CHECK_FALSE(g.is_polynomial());
  CHECK((f * g).deg_y() == 4);
  auto cy = (f * g).coeff_y(4);
  REQUIRE(cy.size() == 1);
  CHECK(cy.begin()->first == 0);
}
