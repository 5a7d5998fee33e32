#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "derham/omega.hpp"

using namespace derham;
using namespace derham::omega;
using derham::poly::PolyForm;
using derham::poly::Term;
using derham::simplicial::SimplicialComplex;

namespace {

SimplicialComplex edge() { return SimplicialComplex::from_maximal({"1", "2"}, {{"1", "2"}}); }

SimplicialComplex boundary_triangle() {
  return SimplicialComplex::from_maximal({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

PolyForm t(int n, int v) { return PolyForm::variable(n, v); }
PolyForm dt(int n, int v) { return PolyForm::differential(n, v); }

}  // namespace

TEST_CASE("edge presentation: relations and degree-0 basis") {
  OmegaPresentation p(edge());
  REQUIRE(p.relations().size() == 1);  // only the affine relation, no nonfaces
  const auto& tr = p.truncation(0, 2);
  // The larger variable is eliminated: basis 1, t0, t0^2.
  REQUIRE(tr.dim() == 3);
  CHECK(tr.basis[0].mono.degree() == 0);
  CHECK(tr.basis[1].mono.e == std::vector<int>{1, 0});
  CHECK(tr.basis[2].mono.e == std::vector<int>{2, 0});

  CHECK(p.normal_form(t(2, 1)) == PolyForm::one(2) - t(2, 0));
  // dt1 = -dt0 after differentiating the affine relation.
  CHECK(p.normal_form(dt(2, 1)) == -dt(2, 0));
  CHECK(p.normal_form(t(2, 0) * dt(2, 1)) == -(t(2, 0) * dt(2, 0)));
  // Omega^2 of an interval is zero in every truncation.
  CHECK(p.truncation(2, 6).dim() == 0);
}

TEST_CASE("two isolated points: functions are determined by two values") {
  auto cx = SimplicialComplex::from_maximal({"1", "2"}, {{"1"}, {"2"}});
  OmegaPresentation p(cx);
  REQUIRE(p.relations().size() == 2);  // affine + the nonface t0 t1
  CHECK(p.truncation(0, 4).dim() == 2);
  // t0^2 = t0 (idempotent): t0(t0 + t1 - 1) = t0^2 - t0 modulo t0 t1.
  CHECK(p.normal_form(t(2, 0).pow(2)) == p.normal_form(t(2, 0)));
  // All 1-forms vanish.
  CHECK(p.truncation(1, 5).dim() == 0);
}

TEST_CASE("empty complex: the unit ideal kills everything") {
  OmegaPresentation p(SimplicialComplex{});
  CHECK(p.truncation(0, 3).dim() == 0);
  CHECK(p.normal_form(PolyForm::one(0)).is_zero());
}

TEST_CASE("triangle boundary: hidden zero and truncation growth") {
  OmegaPresentation p(boundary_triangle());
  const int n = 3;
  REQUIRE(p.relations().size() == 2);
  CHECK(p.normal_form(t(n, 0).pow(2) * t(n, 1).pow(2) * dt(n, 2)).is_zero());
  CHECK_FALSE(p.normal_form(t(n, 0).pow(2) * t(n, 1).pow(2)).is_zero());
  // h^1 lives in weight 2 already: dim Omega^1 grows then the pattern locks.
  CHECK(p.truncation(1, 1).dim() == 2);
  // Truncation bases are prefixes of deeper ones.
  const auto& small = p.truncation(1, 3);
  const auto& big = p.truncation(1, 4);
  REQUIRE(small.dim() <= big.dim());
  for (int i = 0; i < small.dim(); ++i) CHECK(small.basis[i] == big.basis[i]);
}

TEST_CASE("coords and from_coords are inverse on normal forms") {
  OmegaPresentation p(boundary_triangle());
  const auto& tr = p.truncation(1, 3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> c(tr.basis.size());
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 7) - 3);
    PolyForm f = tr.from_coords(3, c);
    CHECK(p.normal_form(f) == f);  // standard terms stay put
    CHECK(tr.coords(f) == c);
  }
}

TEST_CASE("omega_d is a differential and preserves truncation weight") {
  OmegaPresentation p(boundary_triangle());
  QMatrix d0 = omega_d(p, 0, 4);
  QMatrix d1 = omega_d(p, 1, 4);
  CHECK(derham::la::mul(d1, d0).is_zero());
  // d of the class of t0^2: 2 t0 dt0 in coordinates.
  const auto& t0 = p.truncation(0, 4);
  const auto& t1t = p.truncation(1, 4);
  auto c = t0.coords(p.normal_form(t(3, 0).pow(2)));
  auto dc = d0.apply(c);
  CHECK(t1t.from_coords(3, dc) == p.normal_form((t(3, 0).pow(2)).d()));
}

TEST_CASE("restriction to a subcomplex kills the absent vertex") {
  auto bt = boundary_triangle();
  OmegaPresentation px(bt);
  // The closed edge {1,2} as its own complex.
  OmegaPresentation pe(SimplicialComplex::from_maximal({"1", "2"}, {{"1", "2"}}));
  for (int q = 0; q <= 1; ++q) {
    QMatrix r = omega_restrict(px, pe, q, 4);  // certifies full rank
    CHECK(r.rows() == pe.truncation(q, 4).dim());
    CHECK(r.cols() == px.truncation(q, 4).dim());
    QMatrix e = omega_extend(px, pe, q, 4);
    CHECK(derham::la::mul(r, e) == QMatrix::identity(r.rows()));
    QMatrix es = omega_extend(px, pe, q, 4, ExtendStrategy::solve, &r);
    CHECK(derham::la::mul(r, es) == QMatrix::identity(r.rows()));
  }
}

TEST_CASE("multiply map lands in the deeper truncation") {
  OmegaPresentation p(boundary_triangle());
  PolyForm f = p.normal_form(t(3, 0) * t(3, 1));  // weight 2 multiplier
  QMatrix m = multiply_map(p, f, 1, 3, 5);
  CHECK(m.rows() == p.truncation(1, 5).dim());
  CHECK(m.cols() == p.truncation(1, 3).dim());
  // Matrix action agrees with multiplying representatives directly.
  const auto& src = p.truncation(1, 3);
  const auto& dst = p.truncation(1, 5);
  auto c = src.coords(p.normal_form(dt(3, 2)));
  CHECK(dst.from_coords(3, m.apply(c)) == p.normal_form(f * p.normal_form(dt(3, 2))));
}

TEST_CASE("partition of unity on the edge matches the frozen coefficients") {
  OmegaPresentation p(edge());
  auto pou = partition_of_unity(p);
  CHECK(pou.N == 3);
  const int n = 2;
  // (t0+t1)^3 split by smallest vertex with exponent >= 2:
  // p_0 = t0 + 3 t1 (from t0^3, 3 t0^2 t1), p_1 = 3 t0 + t1.
  CHECK(pou.p[0] == t(n, 0) + t(n, 1) * 3);
  CHECK(pou.p[1] == t(n, 0) * 3 + t(n, 1));
  PolyForm sum = pou.rho[0] + pou.rho[1] - PolyForm::one(n);
  CHECK(p.normal_form(sum).is_zero());
}

TEST_CASE("partition of unity sums to one on the triangle boundary") {
  OmegaPresentation p(boundary_triangle());
  auto pou = partition_of_unity(p);
  CHECK(pou.N == 4);
  PolyForm sum(3);
  for (const auto& r : pou.rho) sum = sum + r;
  CHECK(p.normal_form(sum - PolyForm::one(3)).is_zero());
  // Each rho_v is divisible by t_v^2 by construction: check rho_0 has no
  // monomial with exponent of t0 below 2.
  for (const auto& [term, coef] : pou.rho[0].terms()) CHECK(term.mono.e[0] >= 2);
}

TEST_CASE("annihilation and extension-restriction lemmas on the triangle boundary") {
  auto bt = boundary_triangle();
  OmegaPresentation px(bt);
  auto pou = partition_of_unity(px);
  std::mt19937_64 rng(0);

  simplicial::VertexTuple v0;
  v0.entries = {0};
  OmegaPresentation st0(simplicial::star(bt, v0).as_complex());
  auto res = verify_tv_annihilation(px, st0, 0, 1, 3, 25, rng);
  CHECK(res.pass);
  CHECK(res.trials == 25);

  std::vector<OmegaPresentation> star_store;
  std::vector<const OmegaPresentation*> stars;
  for (int v = 0; v < 3; ++v) {
    simplicial::VertexTuple u;
    u.entries = {v};
    star_store.emplace_back(simplicial::star(bt, u).as_complex());
  }
  for (const auto& s : star_store) stars.push_back(&s);
  auto er = verify_extres(px, px, stars, pou, 1, 2, 10, rng);
  CHECK(er.pass);
}
