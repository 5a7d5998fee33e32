#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "derham/groebner.hpp"
#include "derham/linalg.hpp"
#include "derham/simplicial.hpp"

namespace derham::omega {

using la::QMatrix;
using la::Rational;
using poly::GroebnerBasis;
using poly::PolyForm;
using poly::Term;

// Thrown when a map certified to be surjective fails its exact rank check;
// that always indicates a bug, never data.
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinates on the standard-monomial basis of a weight-truncated piece of
// the presented module in one form degree.  Bases are sorted weight-major, so
// the degree-D basis is a prefix of every higher truncation's basis.
struct OmegaTruncation {
  int q = 0;
  int D = 0;
  std::vector<Term> basis;
  std::map<Term, int, poly::TermOrderLess> index;

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<Rational> coords(const PolyForm& nf) const;  // argument must be in normal form
  PolyForm from_coords(int nvars, const std::vector<Rational>& c) const;
};

// Presentation of the polynomial de Rham algebra of a finite simplicial
// complex: one variable per vertex, the relations (sum of all variables - 1)
// and one squarefree monomial per minimal non-face, and in each form degree q
// the induced submodule of the free module on the q-fold dt wedges.  Normal
// forms are canonical (reduced Groebner bases throughout).
class OmegaPresentation {
 public:
  explicit OmegaPresentation(simplicial::SimplicialComplex cx, long pair_limit = 200000);

  const simplicial::SimplicialComplex& complex() const { return cx_; }
  int nvars() const { return cx_.vertex_count(); }
  const std::vector<PolyForm>& relations() const { return relations_; }

  const GroebnerBasis& module_gb(int q) const;  // q = 0 is the ring ideal
  const OmegaTruncation& truncation(int q, int D) const;

  // Canonical representative of the class of f (form degree read off f;
  // mixed-degree input reduces degree by degree).
  PolyForm normal_form(const PolyForm& f) const;

 private:
  simplicial::SimplicialComplex cx_;
  long pair_limit_ = 200000;
  std::vector<PolyForm> relations_;
  mutable std::map<int, GroebnerBasis> gb_;
  mutable std::map<std::pair<int, int>, OmegaTruncation> trunc_;
};

// Index map sending each variable of `from` to the same-labelled variable of
// `to`, or -1 where the vertex is absent.
std::vector<int> variable_map(const OmegaPresentation& from, const OmegaPresentation& to);

// Differential on truncations: trunc(q, D) -> trunc(q+1, D).
QMatrix omega_d(const OmegaPresentation& p, int q, int D);

// Restriction along a subcomplex inclusion (kill absent vertices, rename the
// rest).  Certifies surjectivity by an exact rank computation.
QMatrix omega_restrict(const OmegaPresentation& from, const OmegaPresentation& to, int q, int D,
                       bool certify = true);

enum class ExtendStrategy { reinterpret, solve };

// Right inverse of omega_restrict with a deterministic, weight-preserving
// choice.  `reinterpret` re-reads the normal-form representative in the
// larger complex; `solve` solves the restriction system with free variables
// pinned to zero.  Both restrict back to the identity.
QMatrix omega_extend(const OmegaPresentation& from, const OmegaPresentation& to, int q, int D,
                     ExtendStrategy strategy = ExtendStrategy::reinterpret,
                     const QMatrix* restriction = nullptr);

// Multiplication by a degree-0 form: trunc(q, D_src) -> trunc(q, D_dst).
QMatrix multiply_map(const OmegaPresentation& p, const PolyForm& f, int q, int D_src, int D_dst);

// Prefix inclusion trunc(q, D) -> trunc(q, D2), D <= D2.
QMatrix omega_inclusion(const OmegaPresentation& p, int q, int D, int D2);

// The squared-variable partition of unity: rho_v = p_v * t_v^2 with
// sum_v rho_v = 1 in the presented ring, built from (sum t_v)^N, N = |V| + 1,
// by assigning each exponent pattern to its smallest vertex with exponent
// >= 2.  Verified in the ring at construction time.
struct PartitionOfUnity {
  int N = 0;
  std::vector<PolyForm> p;
  std::vector<PolyForm> rho;
};

PartitionOfUnity partition_of_unity(const OmegaPresentation& pres);

struct CheckResult {
  std::string name;
  bool pass = false;
  long trials = 0;
  std::string detail;
};

// t_v^2 annihilates the kernel of restriction to the star of v: for random
// elements of ker(trunc(Y) -> trunc(St_Y v)) the product with t_v^2 is zero
// in the presentation.  star_v is the presentation of St_Y(v); v_in_y is the
// variable index of v in Y, or -1 when v is not a vertex of Y.
CheckResult verify_tv_annihilation(const OmegaPresentation& y, const OmegaPresentation& star_v,
                                   int v_in_y, int q, int D, int trials, std::mt19937_64& rng);

// The extension-restriction identity: summing rho_v times the restriction to
// Y of the distinguished extension of omega|_{St_Y v} recovers omega, as an
// exact matrix identity and on random vectors.  stars[v] is the presentation
// of St_Y(v) for every vertex v of X (null when empty).
CheckResult verify_extres(const OmegaPresentation& x, const OmegaPresentation& y,
                          const std::vector<const OmegaPresentation*>& stars,
                          const PartitionOfUnity& pou, int q, int D, int trials, std::mt19937_64& rng);

}  // namespace derham::omega
