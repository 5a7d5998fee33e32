#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derham/cech.hpp"

using namespace derham;
using namespace derham::cech;
using derham::la::QMatrix;

namespace {

Workspace boundary_triangle_ws() {
  return Workspace(simplicial::SimplicialComplex::from_maximal(
      {"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}}));
}

Workspace boundary_tetrahedron_ws() {
  return Workspace(simplicial::SimplicialComplex::from_maximal(
      {"1", "2", "3", "4"},
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}}));
}

}  // namespace

TEST_CASE("cech spaces assemble star components") {
  auto ws = boundary_triangle_ws();
  for (Side side : {Side::omega, Side::sullivan}) {
    // p = -1: one component, the whole complex.
    auto aug = cech_space(ws, side, -1, 0, 2);
    REQUIRE(aug.tuples.size() == 1);
    CHECK(aug.total_dim == ws.space_dim(side, 0, 0, 2));
    // p = 0: one component per vertex star.
    auto c0 = cech_space(ws, side, 0, 0, 2);
    CHECK(c0.tuples.size() == 3);
    CHECK(c0.total_dim > 0);
    // p = 2: the tuple {1,2,3} spans no simplex; its star is empty.
    auto c2 = cech_space(ws, side, 2, 0, 2);
    REQUIRE(c2.tuples.size() == 1);
    CHECK(c2.total_dim == 0);
  }
}

TEST_CASE("cech differential squares to zero and commutes with d") {
  auto ws = boundary_triangle_ws();
  for (Side side : {Side::omega, Side::sullivan}) {
    for (int q = 0; q <= 1; ++q) {
      QMatrix daug = cech_delta(ws, side, -1, q, 3);
      QMatrix d0 = cech_delta(ws, side, 0, q, 3);
      QMatrix d1 = cech_delta(ws, side, 1, q, 3);
      CHECK(la::mul(d0, daug).is_zero());
      CHECK(la::mul(d1, d0).is_zero());
      // Component-wise de Rham differential commutes with delta.
      QMatrix dq0 = cech_component_d(ws, side, 0, q, 3);
      QMatrix dq1 = cech_component_d(ws, side, 1, q, 3);
      QMatrix d0_up = cech_delta(ws, side, 0, q + 1, 3);
      CHECK(la::mul(d0_up, dq0) == la::mul(dq1, d0));
    }
  }
}

TEST_CASE("augmentation is injective") {
  auto ws = boundary_tetrahedron_ws();
  for (Side side : {Side::omega, Side::sullivan}) {
    QMatrix daug = cech_delta(ws, side, -1, 1, 3);
    CHECK(la::rank(daug) == daug.cols());
  }
}

TEST_CASE("contracting homotopy certifies row exactness") {
  auto ws = boundary_triangle_ws();
  for (Side side : {Side::omega, Side::sullivan}) {
    for (int q = 0; q <= 2; ++q) {
      auto r = certify_row_exactness(ws, side, q, 2, 2);
      CHECK(r.pass);
      CHECK(r.identities > 0);
      if (!r.pass)
        for (const auto& f : r.failures) MESSAGE(f);
    }
  }
}

TEST_CASE("row exactness on the tetrahedron boundary at q = 1") {
  auto ws = boundary_tetrahedron_ws();
  for (Side side : {Side::omega, Side::sullivan}) {
    auto r = certify_row_exactness(ws, side, 1, 2, 2);
    CHECK(r.pass);
  }
}

TEST_CASE("homotopy weights do not depend on the extension choice") {
  // rho_v * (difference of two right inverses of restriction to St v) = 0:
  // this is what makes K canonical.  Exercised on the triangle boundary with
  // Y = X, v = each vertex.
  auto x = simplicial::SimplicialComplex::from_maximal(
      {"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
  omega::OmegaPresentation px(x);
  auto pou = omega::partition_of_unity(px);
  const int q = 1, D = 2;
  for (int v = 0; v < 3; ++v) {
    simplicial::VertexTuple u;
    u.entries = {v};
    omega::OmegaPresentation st(simplicial::star(x, u).as_complex());
    QMatrix r = omega::omega_restrict(px, st, q, D);
    QMatrix e1 = omega::omega_extend(px, st, q, D, omega::ExtendStrategy::reinterpret);
    QMatrix e2 = omega::omega_extend(px, st, q, D, omega::ExtendStrategy::solve, &r);
    QMatrix m = omega::multiply_map(px, pou.rho[static_cast<std::size_t>(v)], q, D,
                                    D + pou.N);
    CHECK(la::mul(m, e1) == la::mul(m, e2));
  }
}
