#include <doctest.h>

#include "semideg/semidegree.hpp"

#include "common.hpp"

using namespace semideg;
using tst::iv;
using tst::mono;
using tst::q;
using tst::series;
using tst::xpow;

TEST_CASE("constructor validates the radius bound") {
  CHECK_NOTHROW(make_semidegree(xpow(q(3, 2)), q(1, 2)));
  CHECK_THROWS_AS(make_semidegree(xpow(q(3, 2)), q(3, 2)), InputError);
  CHECK_THROWS_AS(make_semidegree(xpow(q(3, 2)), q(2)), InputError);
  CHECK_NOTHROW(make_semidegree(Dwps(), q(-1))); // delta(x) = 1 > 0 regardless
  // truncated_semidegree always yields a valid pair
  auto t = truncated_semidegree(series({{1, q(3, 2)}, {1, q(1, 4)}}), q(1, 2));
  CHECK(t.phi == xpow(q(3, 2)));
  CHECK(t.r == q(1, 2));
}

TEST_CASE("formal data") {
  auto fd = formal_data(tst::w23());
  CHECK(fd.p == 1);
  CHECK(fd.l == 0);
  CHECK(fd.p_last == 2);
  CHECK(fd.p_tilde == 2);
  REQUIRE(fd.pairs.size() == 1);
  CHECK(fd.pairs[0] == std::make_pair(Int(3), Int(2)));

  auto fe = formal_data(tst::row3());
  CHECK(fe.p == 2);
  CHECK(fe.l == 1);
  CHECK(fe.p_last == 1);
  CHECK(fe.p_tilde == 2);
  REQUIRE(fe.pairs.size() == 2);
  CHECK(fe.pairs[0] == std::make_pair(Int(5), Int(2)));
  CHECK(fe.pairs[1] == std::make_pair(Int(-5), Int(1)));

  auto fg = formal_data(tst::deg_sd());
  CHECK(fg.p_tilde == 1);
  CHECK(fg.l == 0);
  REQUIRE(fg.pairs.size() == 1);
  CHECK(fg.pairs[0] == std::make_pair(Int(1), Int(1)));
}

TEST_CASE("eval: weighted degree") {
  Semidegree d = tst::w23(); // weights 2 for x, 3 for y
  CHECK(*eval(d, mono(1, 1, 1)) == 5);
  CHECK(*eval(d, mono(1, 1, 0)) == 2);
  CHECK(*eval(d, mono(1, 0, 1)) == 3);
  CHECK_FALSE(eval(d, LaurentPoly2()).has_value()); // deg(0) = -infinity
}

TEST_CASE("eval and lc on the row-3 semidegree") {
  Semidegree d = tst::row3();
  LaurentPoly2 f = mono(1, 0, 2) - mono(1, 5, 0) - mono(2, 1, 0);
  CHECK(*eval(d, f) == 0); // delta(y^2 - x^5 - 2x) = 0
  CHECK(*eval(d, LaurentPoly2::var_x()) == 2);

  // y^2 - x^5 substitutes to 2x + 2 xi + lower, so lc = 2 at value 2
  LaurentPoly2 g = mono(1, 0, 2) - mono(1, 5, 0);
  auto r = eval_full(d, g);
  CHECK(*r.value == 2);
  CHECK(r.norm == q(1));
  CHECK(r.lc == XiPoly(FieldElem(2L)));
}

TEST_CASE("lc on the weighted-degree semidegree") {
  Semidegree d = tst::w23();
  LaurentPoly2 g = mono(1, 0, 2) - mono(1, 3, 0); // y^2 - x^3
  auto r = eval_full(d, g);
  CHECK(*r.value == 6);
  XiPoly expect = XiPoly::xi() * XiPoly::xi() - XiPoly(FieldElem(1L));
  CHECK(r.lc == expect); // xi^2 - 1, the shape h(xi^{p_last}) with p_last = 2
  CHECK(lc(d, LaurentPoly2::var_x()) == XiPoly(FieldElem(1L)));
}

TEST_CASE("lc against the x^{3/2} semidegree distinguishes the curvette") {
  // on (x^{3/2}, 1/2): y^2 - x^3 substitutes to 2 xi x^2 + xi^2 x,
  // so lc = 2 xi, not xi^2 - 1 (that shape belongs to (0, 3/2))
  Semidegree d = tst::x32();
  auto r = eval_full(d, mono(1, 0, 2) - mono(1, 3, 0));
  CHECK(*r.value == 4);
  CHECK(r.lc == XiPoly::xi().scale(FieldElem(2L)));
}

TEST_CASE("eval additivity bound") {
  Semidegree d = tst::row3();
  LaurentPoly2 f = mono(1, 0, 2) - mono(1, 5, 0);
  LaurentPoly2 g = mono(3, 1, 1) + mono(1, 0, 0);
  auto vf = *eval(d, f), vg = *eval(d, g);
  CHECK(*eval(d, f * g) == vf + vg);
  auto vs = eval(d, f + g);
  CHECK(vs.has_value());
  CHECK(*vs <= std::max(vf, vg));
}

TEST_CASE("substitute exposes the xi-series") {
  Semidegree d = tst::x32();
  auto xs = substitute(d, mono(1, 0, 1)); // y -> x^{3/2} + xi x^{1/2}
  REQUIRE(xs.size() == 2);
  CHECK(xs.rbegin()->first == q(3, 2));
  CHECK(xs.begin()->first == q(1, 2));
  CHECK(xs.begin()->second == XiPoly::xi());
}
