#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "derham/groebner.hpp"
#include "derham/polyform.hpp"

using namespace derham::poly;
using derham::la::Rational;

namespace {

Monomial mono(std::vector<int> e) {
  Monomial m(static_cast<int>(e.size()));
  m.e = std::move(e);
  return m;
}

PolyForm t(int n, int v) { return PolyForm::variable(n, v); }
PolyForm dt(int n, int v) { return PolyForm::differential(n, v); }

}  // namespace

TEST_CASE("grevlex order: degree first, then reverse lex") {
  CHECK(grevlex_less(mono({1, 0}), mono({1, 1})));   // degree 1 < 2
  CHECK(grevlex_less(mono({0, 2}), mono({1, 2})));   // degree 2 < 3
  // Equal degree: more of the first (lowest) differing variable = smaller.
  CHECK(grevlex_less(mono({1, 0}), mono({0, 1})));   // t0 < t1
  CHECK(grevlex_less(mono({2, 0, 0}), mono({1, 1, 0})));
  CHECK(grevlex_less(mono({1, 1, 0}), mono({1, 0, 1})));
  CHECK(grevlex_less(mono({0, 2, 1}), mono({0, 1, 2})));
  CHECK_FALSE(grevlex_less(mono({0, 1}), mono({0, 1})));
}

TEST_CASE("dt-set sequence order") {
  // {0} < {1}, {0,1} < {0,2} < {1,2}
  CHECK(dtset_seq_less(0b01, 0b10));
  CHECK(dtset_seq_less(0b011, 0b101));
  CHECK(dtset_seq_less(0b101, 0b110));
  CHECK(dtset_seq_less(0, 0b1));  // empty sequence first
}

TEST_CASE("wedge signs and exterior algebra relations") {
  CHECK(wedge_sign(0b01, 0b10) == 1);    // dt0 ^ dt1 in order
  CHECK(wedge_sign(0b10, 0b01) == -1);   // dt1 ^ dt0 swaps
  CHECK(wedge_sign(0b01, 0b01) == 0);    // dt0 ^ dt0 = 0
  CHECK(wedge_sign(0b011, 0b100) == 1);
  CHECK(wedge_sign(0b100, 0b011) == 1);  // two transpositions
  CHECK(wedge_sign(0b010, 0b101) == -1);

  const int n = 3;
  CHECK(dt(n, 0) * dt(n, 1) == -(dt(n, 1) * dt(n, 0)));
  CHECK((dt(n, 0) * dt(n, 0)).is_zero());
  // Degree-0 forms commute with everything.
  CHECK(t(n, 0) * dt(n, 1) == dt(n, 1) * t(n, 0));
}

TEST_CASE("polynomial arithmetic is exact") {
  const int n = 2;
  PolyForm f = t(n, 0) + t(n, 1) * Rational(1, 3);
  PolyForm g = f * 3;
  CHECK(g == t(n, 0) * 3 + t(n, 1));
  CHECK((f - f).is_zero());
  CHECK(f.pow(2) == t(n, 0) * t(n, 0) + t(n, 0) * t(n, 1) * Rational(2, 3) +
                        t(n, 1) * t(n, 1) * Rational(1, 9));
}

TEST_CASE("differential squares to zero and satisfies Leibniz") {
  const int n = 3;
  PolyForm f = t(n, 0) * t(n, 1) * t(n, 2) + t(n, 1).pow(2);
  CHECK(f.d().d().is_zero());
  PolyForm g = t(n, 2) + PolyForm::one(n);
  CHECK((f * g).d() == f.d() * g + f * g.d());
  // d on a 1-form: anti-Leibniz via the wedge.
  PolyForm w = t(n, 0) * dt(n, 1);
  CHECK(w.d() == dt(n, 0) * dt(n, 1));
}

TEST_CASE("weight counts each t and each dt as one") {
  const int n = 3;
  PolyForm w = t(n, 0).pow(2) * dt(n, 1) * dt(n, 2);
  CHECK(w.weight() == 4);
  CHECK(w.form_degree() == 2);
  CHECK(PolyForm::one(n).weight() == 0);
}

TEST_CASE("weight basis sizes of the free truncation") {
  // nvars=2, q=0, D=2: 1, t0, t1, t0^2, t0 t1, t1^2.
  CHECK(weight_basis(2, 0, 2).size() == 6);
  // nvars=2, q=1: dt0, dt1 each with monomials of degree <= D-1.
  CHECK(weight_basis(2, 1, 1).size() == 2);
  CHECK(weight_basis(2, 1, 2).size() == 6);
  // q=2 over 2 variables: only dt0^dt1, monomial degree <= D-2.
  CHECK(weight_basis(2, 2, 2).size() == 1);
  CHECK(weight_basis(2, 2, 4).size() == 6);
  CHECK(weight_basis(2, 3, 9).empty());
  // The basis of weight <= D is a prefix of the basis of weight <= D+1.
  auto small = weight_basis(3, 1, 3);
  auto big = weight_basis(3, 1, 4);
  REQUIRE(small.size() < big.size());
  CHECK(std::equal(small.begin(), small.end(), big.begin()));
}

TEST_CASE("substitution is an algebra map compatible with d") {
  // t0 -> s^2, t1 -> 1 - s on one target variable.
  Substitution sub;
  sub.target_nvars = 1;
  sub.t_img = {t(1, 0).pow(2), PolyForm::one(1) - t(1, 0)};
  sub.dt_img = {sub.t_img[0].d(), sub.t_img[1].d()};

  const int n = 2;
  PolyForm f = t(n, 0) * t(n, 1);
  PolyForm g = t(n, 0) + t(n, 1);
  CHECK(substitute(f * g, sub) == substitute(f, sub) * substitute(g, sub));
  CHECK(substitute(f.d(), sub) == substitute(f, sub).d());
  CHECK(substitute(f.d() * dt(n, 1), sub) == substitute(f.d(), sub) * substitute(dt(n, 1), sub));
}

TEST_CASE("renaming substitution kills unmapped variables") {
  auto sub = Substitution::renaming(3, {1, -1, 0}, 2);
  PolyForm f = t(3, 0) * t(3, 2) + t(3, 1);
  CHECK(substitute(f, sub) == t(2, 1) * t(2, 0));
  CHECK(substitute(dt(3, 1), sub).is_zero());
  CHECK(substitute(dt(3, 0), sub) == dt(2, 1));
}

TEST_CASE("buchberger on the affine ideal of an edge") {
  // Ideal (t0 + t1 - 1): already a basis; the larger variable t1 leads.
  const int n = 2;
  auto gb = buchberger({t(n, 0) + t(n, 1) - PolyForm::one(n)}, n);
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0].leading_term().mono == mono({0, 1}));
  CHECK(gb.normal_form(t(n, 1)) == PolyForm::one(n) - t(n, 0));
  CHECK(gb.contains((t(n, 0) + t(n, 1) - PolyForm::one(n)) * t(n, 1)));
  // Standard monomials restricted to weight <= 2: 1, t0, t0^2.
  int count = 0;
  for (const Term& b : weight_basis(n, 0, 2))
    if (gb.is_standard(b)) ++count;
  CHECK(count == 3);
}

TEST_CASE("buchberger on the triangle boundary ring") {
  // (t0 + t1 + t2 - 1, t0 t1 t2): the hidden relations appear in the basis.
  const int n = 3;
  PolyForm affine = t(n, 0) + t(n, 1) + t(n, 2) - PolyForm::one(n);
  PolyForm nonface = t(n, 0) * t(n, 1) * t(n, 2);
  auto gb = buchberger({affine, nonface}, n);
  CHECK(gb.contains(nonface));
  CHECK(gb.contains(nonface * t(n, 1)));
  CHECK_FALSE(gb.contains(t(n, 0) * t(n, 1)));
  CHECK_FALSE(gb.is_unit_ideal());
  // Normal forms are canonical: idempotent and linear.
  PolyForm f = t(n, 0).pow(2) * t(n, 1).pow(2);
  CHECK(gb.normal_form(gb.normal_form(f)) == gb.normal_form(f));
  CHECK_FALSE(gb.normal_form(f).is_zero());

  // Generator order does not change the reduced basis.
  auto gb2 = buchberger({nonface, affine}, n);
  CHECK(gb.generators() == gb2.generators());
}

TEST_CASE("unit ideal detection") {
  auto gb = buchberger({-PolyForm::one(0)}, 0);
  CHECK(gb.is_unit_ideal());
  CHECK(gb.normal_form(PolyForm::one(0)).is_zero());
}

TEST_CASE("module groebner basis separates positions") {
  // Submodule of Omega^1 on two variables generated by dt0 + dt1 and t0 dt0.
  const int n = 2;
  auto gb = buchberger({dt(n, 0) + dt(n, 1), t(n, 0) * dt(n, 0)}, n);
  CHECK(gb.contains(t(n, 0) * dt(n, 0)));
  CHECK(gb.contains(t(n, 0) * dt(n, 1) * -1));
  CHECK_FALSE(gb.contains(dt(n, 0)));
  // dt1 is the larger position, so dt1 reduces to -dt0.
  CHECK(gb.normal_form(dt(n, 1)) == -dt(n, 0));
}
