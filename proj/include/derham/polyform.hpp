#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "derham/rational.hpp"

namespace derham::poly {

using la::Rational;

// Set of dt-indices of a wedge monomial dt_{i1} ^ ... ^ dt_{iq}, i1 < ... < iq,
// as a bitmask over the variable indices of the ambient context.
using DtSet = std::uint64_t;

int wedge_sign(DtSet a, DtSet b);  // 0 if not disjoint, else +-1

struct Monomial {
  std::vector<int> e;  // dense exponents, one slot per context variable

  explicit Monomial(int nvars = 0) : e(nvars, 0) {}
  int degree() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial quotient(const Monomial& m) const;  // this / m, requires m | this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& m) const;
  bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic order.  Variable precedence increases with the
// index: the last-listed variable is the largest.  Among equal total degrees
// the first (lowest) variable with differing exponent decides, more of it
// meaning smaller.
bool grevlex_less(const Monomial& a, const Monomial& b);

// Lexicographic order on the increasing index sequences of two dt-sets.
bool dtset_seq_less(DtSet a, DtSet b);

struct Term {
  Monomial mono;
  DtSet dts = 0;

  int form_degree() const;
  int weight() const { return mono.degree() + form_degree(); }
  bool operator==(const Term&) const = default;
};

// Module term order used for normal forms: grevlex on the monomial part,
// ties broken by the position (dt-set), larger sequence meaning larger term.
// This eliminates the largest vertex first on both the ring and dt sides.
bool term_order_less(const Term& a, const Term& b);

// Display/basis order: weight first, then dt-set, then monomial (ascending
// grevlex).  Weight-major sorting makes a degree-D basis a prefix of every
// higher-degree basis over the same presentation.
bool basis_term_less(const Term& a, const Term& b);

struct TermOrderLess {
  bool operator()(const Term& a, const Term& b) const { return term_order_less(a, b); }
};

// Polynomial differential form with exact rational coefficients: a finite sum
// of terms c * t^alpha * dt_S over a fixed number of context variables.
class PolyForm {
 public:
  explicit PolyForm(int nvars = 0) : nvars_(nvars) {}

  static PolyForm constant(int nvars, const Rational& c);
  static PolyForm one(int nvars) { return constant(nvars, 1); }
  static PolyForm variable(int nvars, int v);      // t_v
  static PolyForm differential(int nvars, int v);  // dt_v

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Term, Rational, TermOrderLess>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // Largest term in the module order; requires a non-zero form.
  const Term& leading_term() const;
  const Rational& leading_coefficient() const;

  // Maximum weight over the terms, -1 for zero.
  int weight() const;
  // Common form degree of all terms; requires homogeneous form degree.
  int form_degree() const;
  bool homogeneous_form_degree() const;

  void add_term(const Term& t, const Rational& c);
  const Rational* coefficient(const Term& t) const;

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator-() const;
  PolyForm operator*(const Rational& c) const;

  // Graded (wedge) product; for degree-0 operands this is the plain
  // polynomial product.
  PolyForm operator*(const PolyForm& o) const;
  PolyForm pow(int k) const;  // degree-0 forms only

  // Kaehler differential: d(t^alpha dt_S) = sum_v alpha_v t^{alpha - e_v} dt_v ^ dt_S.
  PolyForm d() const;

  bool operator==(const PolyForm& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_ = 0;
  std::map<Term, Rational, TermOrderLess> terms_;
};

// A substitution t_v -> t_img[v], dt_v -> dt_img[v] into a target context.
// It is a map of differential graded algebras whenever dt_img = d(t_img),
// which is how restriction and face maps are realized.
struct Substitution {
  int target_nvars = 0;
  std::vector<PolyForm> t_img;
  std::vector<PolyForm> dt_img;

  // Renaming along an injective index map (entries -1 send a variable and its
  // differential to zero -- the algebra map killing that vertex).
  static Substitution renaming(int source_nvars, const std::vector<int>& map, int target_nvars);
};

PolyForm substitute(const PolyForm& f, const Substitution& s);

// All terms t^alpha dt_S with |S| = q and weight <= D over nvars variables,
// in the basis order.  This is the monomial basis of the free truncation.
std::vector<Term> weight_basis(int nvars, int q, int D);

// All dt-sets of size q over nvars variables, ascending.
std::vector<DtSet> dtsets(int nvars, int q);

std::string to_string(const Term& t);
std::string to_string(const PolyForm& f);

}  // namespace derham::poly
