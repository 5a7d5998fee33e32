#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derham/simplicial.hpp"

using namespace derham::simplicial;

namespace {

SimplicialComplex boundary_triangle() {
  return SimplicialComplex::from_maximal({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

SimplicialComplex boundary_tetrahedron() {
  return SimplicialComplex::from_maximal(
      {"1", "2", "3", "4"},
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

VertexTuple tuple(std::vector<int> entries) {
  VertexTuple u;
  u.entries = std::move(entries);
  return u;
}

}  // namespace

TEST_CASE("from_maximal builds the downward closure") {
  auto x = SimplicialComplex::from_maximal({"a", "b", "c"}, {{"a", "b", "c"}});
  CHECK(x.vertex_count() == 3);
  // 2^3 - 1 non-empty faces of a triangle.
  CHECK(x.simplices().size() == 7);
  CHECK(x.dimension() == 2);
  CHECK(x.has_simplex(make_vertex_set({0, 1})));
  CHECK(x.simplices_of_dimension(1).size() == 3);
  CHECK(x.maximal_simplices() == std::vector<VertexSet>{make_vertex_set({0, 1, 2})});
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS(SimplicialComplex::from_maximal({"a", "a"}, {{"a"}}));          // duplicate label
  CHECK_THROWS(SimplicialComplex::from_maximal({"a"}, {{"b"}}));               // unknown label
  CHECK_THROWS(SimplicialComplex::from_maximal({"a", "b"}, {{"a", "a"}}));     // repeated vertex
  CHECK_THROWS(SimplicialComplex::from_maximal({"a", "b"}, {{"a"}}));          // b uncovered
  CHECK_NOTHROW(SimplicialComplex::from_maximal({}, {}));                      // empty is legal
}

TEST_CASE("empty complex") {
  SimplicialComplex x;
  CHECK(x.empty());
  CHECK(x.dimension() == -1);
  CHECK(x.minimal_nonfaces().empty());
}

TEST_CASE("minimal nonfaces") {
  auto bt = boundary_triangle();
  CHECK(bt.minimal_nonfaces() == std::vector<VertexSet>{make_vertex_set({0, 1, 2})});

  auto two = SimplicialComplex::from_maximal({"1", "2"}, {{"1"}, {"2"}});
  CHECK(two.minimal_nonfaces() == std::vector<VertexSet>{make_vertex_set({0, 1})});

  // Full simplex: nothing is missing.
  auto full = SimplicialComplex::from_maximal({"1", "2", "3"}, {{"1", "2", "3"}});
  CHECK(full.minimal_nonfaces().empty());

  // Two triangles sharing the edge {2,3}: the only minimal nonface is {1,4}.
  auto tt = SimplicialComplex::from_maximal(
      {"1", "2", "3", "4"}, {{"1", "2", "3"}, {"2", "3", "4"}});
  CHECK(tt.minimal_nonfaces() == std::vector<VertexSet>{make_vertex_set({0, 3})});
}

TEST_CASE("closed stars") {
  auto bt = boundary_triangle();
  // St(1) on the triangle boundary is the path 2-1-3: both edges at vertex 1.
  auto st = star(bt, tuple({0}));
  CHECK(st.simplices().size() == 5);  // {1},{2},{3},{12},{13}
  CHECK_FALSE(st.simplices().count(make_vertex_set({1, 2})));

  // The empty tuple's star is all of X.
  CHECK(star(bt, tuple({})).simplices().size() == bt.simplices().size());

  // {1,2,3} spans no simplex here, so its star is empty.
  CHECK(star(bt, tuple({0, 1, 2})).empty());

  // Star of an edge is the closed edge itself.
  auto ste = star(bt, tuple({0, 1}));
  CHECK(ste.simplices().size() == 3);
}

TEST_CASE("star_in stays inside the subcomplex") {
  auto bt = boundary_triangle();
  auto y = star(bt, tuple({0}));              // path 2-1-3
  auto z = star_in(y, tuple({1}));            // star of vertex 2 inside the path
  CHECK(z.simplices().size() == 3);           // {2},{1},{12}
  CHECK(z.simplices().count(make_vertex_set({0, 1})) == 1);
  CHECK_FALSE(z.simplices().count(make_vertex_set({0, 2})));
}

TEST_CASE("subcomplex as standalone complex keeps labels") {
  auto bt = boundary_triangle();
  auto st = star(bt, tuple({2}));  // St(3): edges {13},{23}
  auto y = st.as_complex();
  CHECK(y.vertex_count() == 3);
  CHECK(y.labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(y.simplices_of_dimension(1).size() == 2);

  // A subcomplex missing a vertex drops it from the standalone complex.
  auto edge = star(bt, tuple({0, 1}));
  auto e = edge.as_complex();
  CHECK(e.vertex_count() == 2);
  CHECK(e.labels() == std::vector<std::string>{"1", "2"});
}

TEST_CASE("increasing tuples") {
  auto bt = boundary_triangle();
  CHECK(increasing_tuples(bt, -1) == std::vector<VertexTuple>{tuple({})});
  CHECK(increasing_tuples(bt, 0).size() == 3);
  CHECK(increasing_tuples(bt, 1).size() == 3);
  CHECK(increasing_tuples(bt, 2) == std::vector<VertexTuple>{tuple({0, 1, 2})});
  CHECK(increasing_tuples(bt, 3).empty());
}

TEST_CASE("simplicial cochain betti numbers") {
  CHECK(simplicial_betti(SimplicialComplex::from_maximal({"p"}, {{"p"}}), 2) ==
        std::vector<long>{1, 0, 0});
  CHECK(simplicial_betti(SimplicialComplex::from_maximal({"1", "2"}, {{"1"}, {"2"}}), 1) ==
        std::vector<long>{2, 0});
  CHECK(simplicial_betti(boundary_triangle(), 2) == std::vector<long>{1, 1, 0});
  CHECK(simplicial_betti(boundary_tetrahedron(), 2) == std::vector<long>{1, 0, 1});
  // Empty complex: all cohomology vanishes.
  CHECK(simplicial_betti(SimplicialComplex(), 1) == std::vector<long>{0, 0});
}
