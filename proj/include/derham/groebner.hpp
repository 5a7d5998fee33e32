#pragma once

#include <stdexcept>
#include <vector>

#include "derham/polyform.hpp"

namespace derham::poly {

struct GroebnerLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced Groebner basis with respect to the module term order.  Positions
// are the dt-sets; the ring case is simply position 0 (empty dt-set).  The
// reduced basis is canonical for the submodule, so normal forms are too.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  explicit GroebnerBasis(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::vector<PolyForm>& generators() const { return gens_; }

  // Canonical normal form: every term of the result is standard.
  PolyForm normal_form(const PolyForm& f) const;
  bool is_standard(const Term& t) const;
  bool contains(const PolyForm& f) const { return normal_form(f).is_zero(); }

  // Ring case only: the presented ring is zero iff 1 lies in the ideal.
  bool is_unit_ideal() const;

 private:
  friend GroebnerBasis buchberger(const std::vector<PolyForm>&, int, long);
  int nvars_ = 0;
  std::vector<PolyForm> gens_;  // monic, interreduced, sorted by leading term
};

// Buchberger's algorithm with the normal pair-selection strategy, the
// product criterion (ring positions only) and the chain criterion.  Throws
// GroebnerLimitExceeded when more than pair_limit S-pairs are examined.
GroebnerBasis buchberger(const std::vector<PolyForm>& input, int nvars, long pair_limit = 200000);

}  // namespace derham::poly
