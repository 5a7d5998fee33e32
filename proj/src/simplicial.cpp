#include "derham/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "derham/linalg.hpp"

namespace derham::simplicial {

VertexSet make_vertex_set(const std::vector<int>& indices) {
  VertexSet s = 0;
  for (int i : indices) {
    if (i < 0 || i >= 64) throw std::invalid_argument("vertex index out of range");
    s |= VertexSet(1) << i;
  }
  return s;
}

std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> v;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1) v.push_back(i);
  return v;
}

static void insert_closure(std::set<VertexSet>& simplices, VertexSet s) {
  // Walk all non-empty subsets of s.
  for (VertexSet t = s; t != 0; t = (t - 1) & s) simplices.insert(t);
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::string>& vertices,
                                                  const std::vector<std::vector<std::string>>& maximal) {
  if (vertices.size() > 64) throw std::invalid_argument("too many vertices (limit 64)");
  SimplicialComplex x;
  x.vertices_ = vertices;
  std::map<std::string, int> index;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex label: " + vertices[i]);
  }
  for (const auto& simplex : maximal) {
    if (simplex.empty()) throw std::invalid_argument("empty simplex in maximal list");
    VertexSet s = 0;
    for (const auto& lbl : simplex) {
      auto it = index.find(lbl);
      if (it == index.end()) throw std::invalid_argument("unknown vertex label: " + lbl);
      const VertexSet bit = VertexSet(1) << it->second;
      if (s & bit) throw std::invalid_argument("repeated vertex in simplex: " + lbl);
      s |= bit;
    }
    insert_closure(x.simplices_, s);
  }
  for (size_t i = 0; i < vertices.size(); ++i)
    if (!x.simplices_.count(VertexSet(1) << i))
      throw std::invalid_argument("vertex not covered by any simplex: " + vertices[i]);
  return x;
}

int SimplicialComplex::index_of(const std::string& label) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex label: " + label);
}

std::vector<VertexSet> SimplicialComplex::simplices_of_dimension(int d) const {
  std::vector<VertexSet> out;
  for (VertexSet s : simplices_)
    if (std::popcount(s) == d + 1) out.push_back(s);
  return out;
}

std::vector<VertexSet> SimplicialComplex::maximal_simplices() const {
  std::vector<VertexSet> out;
  for (VertexSet s : simplices_) {
    bool maximal = true;
    for (VertexSet t : simplices_)
      if (t != s && (t & s) == s) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return vertex_list(a) < vertex_list(b); });
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet s : simplices_) d = std::max(d, std::popcount(s) - 1);
  return d;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonfaces() const {
  // A subset is a non-face iff it is not a simplex; minimal ones have every
  // proper subset a simplex (or empty).  Vertex counts are tiny, so walk all
  // subsets of the vertex set by size.
  std::vector<VertexSet> out;
  const int n = vertex_count();
  std::vector<VertexSet> candidates;
  for (VertexSet s = 1; s < (VertexSet(1) << n); ++s) candidates.push_back(s);
  std::sort(candidates.begin(), candidates.end(), [](VertexSet a, VertexSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return vertex_list(a) < vertex_list(b);
  });
  for (VertexSet s : candidates) {
    if (has_simplex(s)) continue;
    bool minimal = true;
    const auto verts = vertex_list(s);
    for (int v : verts) {
      const VertexSet face = s & ~(VertexSet(1) << v);
      if (face != 0 && !has_simplex(face)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

Subcomplex::Subcomplex(const SimplicialComplex* parent, std::set<VertexSet> simplices)
    : parent_(parent), simplices_(std::move(simplices)) {
  for (VertexSet s : simplices_)
    if (!parent_->has_simplex(s)) throw std::invalid_argument("subcomplex simplex not in parent");
}

std::vector<int> Subcomplex::vertex_indices() const {
  VertexSet all = 0;
  for (VertexSet s : simplices_) all |= s;
  return vertex_list(all);
}

SimplicialComplex Subcomplex::as_complex() const {
  const auto verts = vertex_indices();
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (int v : verts) labels.push_back(parent_->label(v));
  std::vector<std::vector<std::string>> maximal;
  for (VertexSet s : simplices_) {
    bool is_max = true;
    for (VertexSet t : simplices_)
      if (t != s && (t & s) == s) {
        is_max = false;
        break;
      }
    if (!is_max) continue;
    std::vector<std::string> simplex;
    for (int v : vertex_list(s)) simplex.push_back(parent_->label(v));
    maximal.push_back(std::move(simplex));
  }
  return SimplicialComplex::from_maximal(labels, maximal);
}

Subcomplex star(const SimplicialComplex& x, const VertexTuple& u) {
  for (int v : u.entries)
    if (v < 0 || v >= x.vertex_count()) throw std::invalid_argument("tuple entry not a vertex");
  const VertexSet base = make_vertex_set(u.entries);
  std::set<VertexSet> simplices;
  for (VertexSet s : x.simplices())
    if ((s & base) == base) insert_closure(simplices, s);
  if (base != 0 && !x.has_simplex(base)) simplices.clear();
  return Subcomplex(&x, std::move(simplices));
}

Subcomplex star_in(const Subcomplex& y, const VertexTuple& u) {
  const VertexSet base = make_vertex_set(u.entries);
  std::set<VertexSet> simplices;
  if (base == 0 || y.simplices().count(base)) {
    for (VertexSet s : y.simplices())
      if ((s & base) == base) insert_closure(simplices, s);
  }
  return Subcomplex(y.parent(), std::move(simplices));
}

std::vector<VertexTuple> increasing_tuples(const SimplicialComplex& x, int p) {
  std::vector<VertexTuple> out;
  if (p < -1) return out;
  if (p == -1) {
    out.push_back(VertexTuple{});
    return out;
  }
  const int n = x.vertex_count();
  const int k = p + 1;
  if (k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(VertexTuple{idx});
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<long> simplicial_betti(const SimplicialComplex& x, int q_max) {
  std::vector<long> h(q_max + 1, 0);
  if (x.empty()) return h;
  std::vector<std::vector<VertexSet>> by_dim(q_max + 2);
  for (int d = 0; d <= q_max + 1; ++d) by_dim[d] = x.simplices_of_dimension(d);
  // Coboundary d_q : C^q -> C^{q+1}; ranks determine everything.
  std::vector<int> ranks(q_max + 1, 0);
  for (int q = 0; q <= q_max; ++q) {
    const auto& rows = by_dim[q + 1];
    const auto& cols = by_dim[q];
    if (rows.empty() || cols.empty()) continue;
    std::map<VertexSet, int> col_index;
    for (size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = static_cast<int>(j);
    la::QMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto verts = vertex_list(rows[i]);
      for (size_t k = 0; k < verts.size(); ++k) {
        const VertexSet face = rows[i] & ~(VertexSet(1) << verts[k]);
        d(static_cast<int>(i), col_index.at(face)) += (k % 2 == 0) ? 1 : -1;
      }
    }
    ranks[q] = la::rank(d);
  }
  for (int q = 0; q <= q_max; ++q) {
    const long dim_q = static_cast<long>(by_dim[q].size());
    const long rank_below = (q == 0) ? 0 : ranks[q - 1];
    h[q] = dim_q - ranks[q] - rank_below;
  }
  return h;
}

}  // namespace derham::simplicial
