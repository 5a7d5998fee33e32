#include "derham/sullivan.hpp"

#include <algorithm>

namespace derham::sullivan {

using poly::Substitution;
using simplicial::vertex_list;

std::vector<Rational> SimplexFormSpace::coords(const PolyForm& f) const {
  std::vector<Rational> c(basis.size(), Rational(0));
  for (const auto& [t, k] : f.terms()) {
    auto it = index.find(t);
    if (it == index.end()) throw std::logic_error("term outside simplex space basis: " + poly::to_string(t));
    c[it->second] = k;
  }
  return c;
}

SimplexFormSpace simplex_space(VertexSet a, int q, int D) {
  SimplexFormSpace s;
  s.vertices = vertex_list(a);
  if (s.vertices.empty()) throw std::invalid_argument("simplex space of the empty set");
  s.reduced_vars.assign(s.vertices.begin(), s.vertices.end() - 1);
  s.q = q;
  s.D = D;
  s.basis = poly::weight_basis(static_cast<int>(s.reduced_vars.size()), q, D);
  for (size_t i = 0; i < s.basis.size(); ++i) s.index.emplace(s.basis[i], static_cast<int>(i));
  return s;
}

Substitution face_substitution(const std::vector<std::string>& src_reduced,
                               const std::vector<std::string>& dst_vertices) {
  const int m = static_cast<int>(dst_vertices.size()) - 1;  // reduced target variables
  Substitution s;
  s.target_nvars = m;
  PolyForm last = PolyForm::one(m);  // image of the eliminated target vertex
  for (int j = 0; j < m; ++j) last = last - PolyForm::variable(m, j);
  for (const auto& lbl : src_reduced) {
    int pos = -1;
    for (size_t j = 0; j < dst_vertices.size(); ++j)
      if (dst_vertices[j] == lbl) {
        pos = static_cast<int>(j);
        break;
      }
    PolyForm img(m);
    if (pos == static_cast<int>(dst_vertices.size()) - 1)
      img = last;
    else if (pos >= 0)
      img = PolyForm::variable(m, pos);
    s.t_img.push_back(img);
    s.dt_img.push_back(img.d());
  }
  return s;
}

static std::vector<std::string> label_list(const SimplicialComplex& x, const std::vector<int>& verts) {
  std::vector<std::string> out;
  out.reserve(verts.size());
  for (int v : verts) out.push_back(x.label(v));
  return out;
}

QMatrix simplex_restrict(const SimplicialComplex& x, VertexSet a, VertexSet b, int q, int D) {
  if ((a & b) != b) throw std::invalid_argument("not a face");
  const SimplexFormSpace src = simplex_space(a, q, D);
  const SimplexFormSpace dst = simplex_space(b, q, D);
  const auto subst = face_substitution(label_list(x, src.reduced_vars), label_list(x, dst.vertices));
  QMatrix m(dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    PolyForm f(static_cast<int>(src.reduced_vars.size()));
    f.add_term(src.basis[j], 1);
    const auto c = dst.coords(substitute(f, subst));
    for (int i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

QMatrix ASpace::coords(const QMatrix& ambient_columns) const {
  auto x = la::multi_solve(basis, ambient_columns);
  if (!x) throw CompatibilityViolation("vector violates face agreement");
  return *x;
}

ASpace a_truncated(const SimplicialComplex& x, int q, int D) {
  ASpace s;
  s.q = q;
  s.D = D;
  s.maximal = x.maximal_simplices();
  int off = 0;
  for (VertexSet a : s.maximal) {
    s.parts.push_back(simplex_space(a, q, D));
    s.offsets.push_back(off);
    off += s.parts.back().dim();
  }
  s.ambient_dim = off;
  // Face-agreement constraints on every pairwise intersection (non-empty
  // intersections of simplices are simplices).
  int rows = 0;
  std::vector<std::tuple<int, int, VertexSet>> pairs;
  for (size_t i = 0; i < s.maximal.size(); ++i)
    for (size_t j = i + 1; j < s.maximal.size(); ++j) {
      const VertexSet c = s.maximal[i] & s.maximal[j];
      if (c == 0) continue;
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j), c);
      rows += simplex_space(c, q, D).dim();
    }
  QMatrix constraints(rows, s.ambient_dim);
  int r = 0;
  for (const auto& [i, j, c] : pairs) {
    const QMatrix ri = simplex_restrict(x, s.maximal[i], c, q, D);
    const QMatrix rj = simplex_restrict(x, s.maximal[j], c, q, D);
    constraints.set_block(r, s.offsets[i], ri);
    constraints.add_block(r, s.offsets[j], rj * Rational(-1));
    r += ri.rows();
  }
  s.basis = la::rank_kernel_image(constraints).kernel;
  return s;
}

// Block-diagonal ambient operator built from one matrix per part, then
// re-expressed on the family bases of src and dst.
static QMatrix assemble(const ASpace& src, const ASpace& dst, const std::vector<QMatrix>& blocks) {
  QMatrix amb(dst.ambient_dim, src.ambient_dim);
  for (size_t i = 0; i < blocks.size(); ++i) amb.set_block(dst.offsets[i], src.offsets[i], blocks[i]);
  return dst.coords(mul(amb, src.basis));
}

QMatrix a_d(const SimplicialComplex& x, const ASpace& src, const ASpace& dst) {
  (void)x;
  if (dst.q != src.q + 1 || dst.D != src.D) throw std::invalid_argument("a_d between mismatched spaces");
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < src.parts.size(); ++i) {
    const auto& p = src.parts[i];
    const auto& pd = dst.parts[i];
    QMatrix b(pd.dim(), p.dim());
    for (int j = 0; j < p.dim(); ++j) {
      PolyForm f(static_cast<int>(p.reduced_vars.size()));
      f.add_term(p.basis[j], 1);
      const auto c = pd.coords(f.d());
      for (int i2 = 0; i2 < pd.dim(); ++i2) b(i2, j) = c[i2];
    }
    blocks.push_back(std::move(b));
  }
  return assemble(src, dst, blocks);
}

QMatrix a_inclusion(const ASpace& src, const ASpace& dst) {
  if (dst.q != src.q || dst.D < src.D) throw std::invalid_argument("a_inclusion between mismatched spaces");
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < src.parts.size(); ++i) {
    const auto& p = src.parts[i];
    const auto& pd = dst.parts[i];
    for (int j = 0; j < p.dim(); ++j)
      if (!(pd.basis[j] == p.basis[j])) throw std::logic_error("weight bases are not nested");
    QMatrix b(pd.dim(), p.dim());
    for (int j = 0; j < p.dim(); ++j) b(j, j) = 1;
    blocks.push_back(std::move(b));
  }
  return assemble(src, dst, blocks);
}

QMatrix a_mult_tv(const SimplicialComplex& x, int v, const ASpace& src, const ASpace& dst) {
  (void)x;
  if (dst.q != src.q || dst.D < src.D + 1) throw std::invalid_argument("a_mult_tv needs one extra weight");
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < src.parts.size(); ++i) {
    const auto& p = src.parts[i];
    const auto& pd = dst.parts[i];
    const int m = static_cast<int>(p.reduced_vars.size());
    PolyForm tv(m);
    if (std::find(p.reduced_vars.begin(), p.reduced_vars.end(), v) != p.reduced_vars.end()) {
      int pos = 0;
      while (p.reduced_vars[pos] != v) ++pos;
      tv = PolyForm::variable(m, pos);
    } else if (p.vertices.back() == v) {
      tv = PolyForm::one(m);
      for (int j = 0; j < m; ++j) tv = tv - PolyForm::variable(m, j);
    }
    QMatrix b(pd.dim(), p.dim());
    for (int j = 0; j < p.dim(); ++j) {
      PolyForm f(m);
      f.add_term(p.basis[j], 1);
      const auto c = pd.coords(tv * f);
      for (int i2 = 0; i2 < pd.dim(); ++i2) b(i2, j) = c[i2];
    }
    blocks.push_back(std::move(b));
  }
  return assemble(src, dst, blocks);
}

QMatrix a_restrict(const SimplicialComplex& x, const ASpace& xs, const SimplicialComplex& y,
                   const ASpace& ys, bool certify) {
  if (xs.q != ys.q || xs.D != ys.D) throw std::invalid_argument("a_restrict between mismatched spaces");
  QMatrix amb(ys.ambient_dim, xs.ambient_dim);
  for (size_t bi = 0; bi < ys.maximal.size(); ++bi) {
    const auto& bp = ys.parts[bi];
    const auto b_labels = label_list(y, bp.vertices);
    // First maximal simplex of x containing b (by labels).
    int ai = -1;
    for (size_t k = 0; k < xs.maximal.size(); ++k) {
      const auto a_labels = label_list(x, xs.parts[k].vertices);
      bool contains = true;
      for (const auto& lbl : b_labels)
        if (std::find(a_labels.begin(), a_labels.end(), lbl) == a_labels.end()) {
          contains = false;
          break;
        }
      if (contains) {
        ai = static_cast<int>(k);
        break;
      }
    }
    if (ai < 0) throw std::invalid_argument("target simplex not contained in the source complex");
    const auto& ap = xs.parts[ai];
    const auto subst = face_substitution(label_list(x, ap.reduced_vars), b_labels);
    QMatrix block(bp.dim(), ap.dim());
    for (int j = 0; j < ap.dim(); ++j) {
      PolyForm f(static_cast<int>(ap.reduced_vars.size()));
      f.add_term(ap.basis[j], 1);
      const auto c = bp.coords(substitute(f, subst));
      for (int i = 0; i < bp.dim(); ++i) block(i, j) = c[i];
    }
    amb.set_block(ys.offsets[bi], xs.offsets[ai], block);
  }
  const QMatrix m = ys.coords(mul(amb, xs.basis));
  if (certify && la::rank(m) != ys.dim())
    throw omega::RankDeficient("family restriction not surjective at q=" + std::to_string(xs.q) +
                               " D=" + std::to_string(xs.D));
  return m;
}

QMatrix a_extend(const QMatrix& restriction) {
  auto e = la::multi_solve(restriction, QMatrix::identity(restriction.rows()));
  if (!e) throw omega::RankDeficient("family extension solve failed");
  return *e;
}

std::vector<Rational> a_unit(const ASpace& space) {
  QMatrix amb(space.ambient_dim, 1);
  for (size_t i = 0; i < space.parts.size(); ++i) {
    const auto& p = space.parts[i];
    const Term one{poly::Monomial(static_cast<int>(p.reduced_vars.size())), 0};
    auto it = p.index.find(one);
    if (it == p.index.end()) throw std::logic_error("constant term missing from simplex space");
    amb(space.offsets[i] + it->second, 0) = 1;
  }
  const QMatrix c = space.coords(amb);
  std::vector<Rational> out(c.rows());
  for (int i = 0; i < c.rows(); ++i) out[i] = c(i, 0);
  return out;
}

// Substitution from presentation variables onto the reduced variables of one
// maximal simplex: kill absent vertices, eliminate the largest.
static Substitution simplex_reduction(const omega::OmegaPresentation& pres, const SimplicialComplex& x,
                                      const SimplexFormSpace& part) {
  std::vector<std::string> all_labels;
  for (int v = 0; v < pres.nvars(); ++v) all_labels.push_back(pres.complex().label(v));
  Substitution s;
  const int m = static_cast<int>(part.reduced_vars.size());
  s.target_nvars = m;
  PolyForm last = PolyForm::one(m);
  for (int j = 0; j < m; ++j) last = last - PolyForm::variable(m, j);
  for (const auto& lbl : all_labels) {
    int pos = -1;
    for (size_t j = 0; j < part.vertices.size(); ++j)
      if (x.label(part.vertices[j]) == lbl) {
        pos = static_cast<int>(j);
        break;
      }
    PolyForm img(m);
    if (pos == static_cast<int>(part.vertices.size()) - 1)
      img = last;
    else if (pos >= 0)
      img = PolyForm::variable(m, pos);
    s.t_img.push_back(img);
    s.dt_img.push_back(img.d());
  }
  return s;
}

static QMatrix eval_P_ambient(const omega::OmegaPresentation& pres, const SimplicialComplex& x,
                              const ASpace& space, int q, int D) {
  const auto& trunc = pres.truncation(q, D);
  QMatrix amb(space.ambient_dim, trunc.dim());
  for (size_t i = 0; i < space.parts.size(); ++i) {
    const auto& p = space.parts[i];
    const auto subst = simplex_reduction(pres, x, p);
    for (int j = 0; j < trunc.dim(); ++j) {
      PolyForm f(pres.nvars());
      f.add_term(trunc.basis[j], 1);
      const auto c = p.coords(substitute(f, subst));
      for (int r = 0; r < p.dim(); ++r) amb(space.offsets[i] + r, j) = c[r];
    }
  }
  return amb;
}

QMatrix eval_P(const omega::OmegaPresentation& pres, const SimplicialComplex& x, const ASpace& space,
               int q, int D) {
  return space.coords(eval_P_ambient(pres, x, space, q, D));
}

omega::CheckResult verify_presentation_deg0(const omega::OmegaPresentation& pres, int D) {
  omega::CheckResult res;
  res.name = "presentation-deg0";
  const ASpace space = a_truncated(pres.complex(), 0, D);
  const QMatrix amb = eval_P_ambient(pres, pres.complex(), space, 0, D);
  const int r = la::rank(amb);
  res.pass = (r == pres.truncation(0, D).dim());
  res.detail = "rank " + std::to_string(r) + " of " + std::to_string(pres.truncation(0, D).dim());
  return res;
}

}  // namespace derham::sullivan
