#pragma once

#include "derham/workspace.hpp"

namespace derham::cech {

using la::QMatrix;

// One column of the augmented Čech double complex: the direct sum over all
// increasing (p+1)-tuples of the side's truncated forms on the closed star of
// the tuple.  p = -1 is the single component over the empty tuple (the whole
// complex); tuples whose entries span no simplex contribute zero components.
struct CechSpace {
  Side side = Side::omega;
  int p = -1;
  int q = 0;
  int D = 0;
  std::vector<simplicial::VertexTuple> tuples;
  std::vector<int> star_ids;
  std::vector<int> dims;
  std::vector<int> offsets;
  int total_dim = 0;

  int tuple_index(const simplicial::VertexTuple& u) const;
};

CechSpace cech_space(Workspace& ws, Side side, int p, int q, int D);

// Čech differential (alternating sum of restrictions): (p,q,D) -> (p+1,q,D).
QMatrix cech_delta(Workspace& ws, Side side, int p, int q, int D);

// Component-wise de Rham differential: (p,q,D) -> (p,q+1,D).
QMatrix cech_component_d(Workspace& ws, Side side, int p, int q, int D);

// Component-wise truncation inclusion: (p,q,D) -> (p,q,D2).
QMatrix cech_inclusion(Workspace& ws, Side side, int p, int q, int D, int D2);

// Contracting homotopy K: (p,q,D) -> (p-1,q,D+N), N = homotopy_shift(side).
// (K omega)_w = sum_v weight_v * [omega_{v*w}] extended over St(w), with the
// sign of sorting v into w.
QMatrix homotopy_K(Workspace& ws, Side side, int p, int q, int D);

// Exactness certificate for the augmented rows: checks delta K + K delta =
// inclusion at 0 <= p <= p_max against the enlarged truncation, K delta =
// inclusion and injectivity of delta at p = -1, delta^2 = 0, and
// commutation of delta with the component differential.
struct RowExactness {
  Side side = Side::omega;
  int q = 0;
  int D = 0;
  int p_max = 0;
  bool pass = false;
  long identities = 0;
  std::vector<std::string> failures;
};

RowExactness certify_row_exactness(Workspace& ws, Side side, int q, int D, int p_max);

}  // namespace derham::cech
