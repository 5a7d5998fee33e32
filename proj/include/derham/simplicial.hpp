#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace derham::simplicial {

// Simplices are bitmasks over the vertex indices of their complex; the vertex
// order (index 0, 1, ...) is the order vertices were listed on construction
// and is fixed for the lifetime of the complex.  At most 64 vertices.
using VertexSet = std::uint64_t;

VertexSet make_vertex_set(const std::vector<int>& indices);
std::vector<int> vertex_list(VertexSet s);

// Finite abstract simplicial complex, stored downward closed.  The empty
// complex (no vertices, no simplices) is legal.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds the downward closure of the given maximal simplices.  Vertices not
  // covered by any listed simplex are not allowed; every vertex must appear.
  static SimplicialComplex from_maximal(const std::vector<std::string>& vertices,
                                        const std::vector<std::vector<std::string>>& maximal);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::string& label(int i) const { return vertices_[i]; }
  const std::vector<std::string>& labels() const { return vertices_; }
  int index_of(const std::string& label) const;  // throws if unknown

  bool empty() const { return simplices_.empty(); }
  bool has_simplex(VertexSet s) const { return simplices_.count(s) > 0; }
  const std::set<VertexSet>& simplices() const { return simplices_; }
  std::vector<VertexSet> simplices_of_dimension(int d) const;
  std::vector<VertexSet> maximal_simplices() const;
  int dimension() const;  // -1 for the empty complex

  // Minimal subsets of the vertex set that are not simplices, in the order
  // (size, vertex-tuple lex).
  std::vector<VertexSet> minimal_nonfaces() const;

 private:
  std::vector<std::string> vertices_;
  std::set<VertexSet> simplices_;
};

// Increasing tuple of vertex indices of a complex; the empty tuple is the
// unique tuple of length 0.
struct VertexTuple {
  std::vector<int> entries;
  bool operator==(const VertexTuple&) const = default;
  auto operator<=>(const VertexTuple&) const = default;
};

// A downward-closed set of simplices of a parent complex.  Vertex identity
// (indices, labels, order) is inherited from the parent.
class Subcomplex {
 public:
  Subcomplex() = default;
  Subcomplex(const SimplicialComplex* parent, std::set<VertexSet> simplices);

  const SimplicialComplex* parent() const { return parent_; }
  const std::set<VertexSet>& simplices() const { return simplices_; }
  bool empty() const { return simplices_.empty(); }
  std::vector<int> vertex_indices() const;  // parent indices, increasing

  // Standalone complex with the induced vertex order and the parent labels.
  SimplicialComplex as_complex() const;

  // Canonical identity: the sorted list of simplex masks.
  std::vector<VertexSet> key() const { return {simplices_.begin(), simplices_.end()}; }

  bool operator==(const Subcomplex& o) const { return simplices_ == o.simplices_; }

 private:
  const SimplicialComplex* parent_ = nullptr;
  std::set<VertexSet> simplices_;
};

// Closed star of the simplex spanned by the entries of u (closure of all
// simplices containing every entry).  The empty tuple yields all of X; a
// tuple not spanning a simplex yields the empty subcomplex.  Entries must be
// valid vertex indices of X.
Subcomplex star(const SimplicialComplex& x, const VertexTuple& u);

// Closed star taken inside the subcomplex y (still rooted at y's parent).
Subcomplex star_in(const Subcomplex& y, const VertexTuple& u);

// All strictly increasing (p+1)-tuples of vertex indices, lexicographic.
// p = -1 yields the singleton list holding the empty tuple.
std::vector<VertexTuple> increasing_tuples(const SimplicialComplex& x, int p);

// Betti numbers h^0..h^q_max of ordered simplicial cochains over the
// rationals; the independent reference for every other cohomology in here.
std::vector<long> simplicial_betti(const SimplicialComplex& x, int q_max);

}  // namespace derham::simplicial
