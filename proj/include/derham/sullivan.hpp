#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "derham/omega.hpp"

namespace derham::sullivan {

using la::QMatrix;
using la::Rational;
using poly::PolyForm;
using poly::Term;
using simplicial::SimplicialComplex;
using simplicial::VertexSet;

// Thrown when a vector expected to satisfy the face-agreement constraints
// fails to lie in the glued subspace; always a bug signal.
struct CompatibilityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Polynomial forms on one closed simplex, written in reduced coordinates: the
// largest vertex is eliminated via t_max = 1 - sum of the others, dt_max =
// -sum of the others, leaving a free graded algebra on the remaining
// variables.  The basis is the free weight basis, so coordinates are direct
// coefficient reads.
struct SimplexFormSpace {
  std::vector<int> vertices;      // ambient vertex indices, ascending
  std::vector<int> reduced_vars;  // vertices minus the largest
  int q = 0;
  int D = 0;
  std::vector<Term> basis;
  std::map<Term, int, poly::TermOrderLess> index;

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Rational> coords(const PolyForm& f) const;
};

SimplexFormSpace simplex_space(VertexSet a, int q, int D);

// Substitution taking a form in the reduced variables of a simplex with
// vertex labels src_reduced (the eliminated largest vertex not listed) to the
// reduced variables of a face with vertex labels dst_vertices (ascending,
// last one eliminated).  Labels absent from the face go to zero.
poly::Substitution face_substitution(const std::vector<std::string>& src_reduced,
                                     const std::vector<std::string>& dst_vertices);

// Restriction between the form spaces of two simplices b <= a of one complex.
QMatrix simplex_restrict(const SimplicialComplex& x, VertexSet a, VertexSet b, int q, int D);

// Weight-truncated piece of the algebra of compatible families: one reduced
// form per maximal simplex, agreeing on every pairwise intersection.  The
// basis is the deterministic kernel basis of the agreement constraints; for a
// single maximal simplex it is the identity on the simplex space.
struct ASpace {
  int q = 0;
  int D = 0;
  std::vector<VertexSet> maximal;
  std::vector<SimplexFormSpace> parts;
  std::vector<int> offsets;
  int ambient_dim = 0;
  QMatrix basis;  // ambient_dim x dim, columns = basis families

  int dim() const { return basis.cols(); }
  // Coordinates of compatible ambient vectors (columns); throws
  // CompatibilityViolation if any column is not a family.
  QMatrix coords(const QMatrix& ambient_columns) const;
};

ASpace a_truncated(const SimplicialComplex& x, int q, int D);

// Differential, prefix inclusion into a deeper truncation, multiplication by
// t_v (ambient vertex index), all expressed on ASpace coordinates.
QMatrix a_d(const SimplicialComplex& x, const ASpace& src, const ASpace& dst);
QMatrix a_inclusion(const ASpace& src, const ASpace& dst);
QMatrix a_mult_tv(const SimplicialComplex& x, int v, const ASpace& src, const ASpace& dst);

// Restriction of families along a subcomplex inclusion (labels match the
// vertices); certifies surjectivity.  a_extend is its deterministic right
// inverse (restriction system solved with free variables zeroed).
QMatrix a_restrict(const SimplicialComplex& x, const ASpace& xs, const SimplicialComplex& y,
                   const ASpace& ys, bool certify = true);
QMatrix a_extend(const QMatrix& restriction);

// Coordinates of the constant-1 family (the augmentation's image).
std::vector<Rational> a_unit(const ASpace& space);

// The canonical evaluation map from the presented de Rham truncation to the
// glued families: substitute t_v = 0 for vertices outside each maximal
// simplex, then eliminate its largest vertex.
QMatrix eval_P(const omega::OmegaPresentation& pres, const SimplicialComplex& x, const ASpace& space,
               int q, int D);

// Injectivity guard for the degree-0 presentation: the presented ring embeds
// into the product of the simplex rings at matching truncation.
omega::CheckResult verify_presentation_deg0(const omega::OmegaPresentation& pres, int D);

}  // namespace derham::sullivan
