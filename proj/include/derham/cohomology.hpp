#pragma once

#include "derham/workspace.hpp"

namespace derham::cohomology {

// Weight-truncated cochain complex of one side on one cached subcomplex:
// dimensions and differentials for q = 0..q_max (targets reach q_max+1), plus
// the coordinates of the unit (the augmentation's image).
struct TruncatedComplex {
  Side side = Side::omega;
  int sub = 0;
  int q_max = 0;
  int D = 0;
  std::vector<int> dims;        // degrees 0..q_max+1
  std::vector<la::QMatrix> d;   // d[q]: degree q -> q+1, for q <= q_max
  std::vector<la::Rational> unit;
};

TruncatedComplex truncated_complex(Workspace& ws, Side side, int sub, int q_max, int D);

// h^q = dim ker d_q - rank d_{q-1} for q = 0..q_max.
std::vector<long> truncated_betti(const TruncatedComplex& t);

struct DegreeStabilization {
  bool stabilized = false;
  long value = 0;
  int D0 = -1;  // earliest D from which the value stays constant to D_max
};

struct BettiReport {
  Side side = Side::omega;
  int sub = 0;
  int q_max = 0;
  int D_min = 0;
  int D_max = 0;
  int window = 0;
  std::vector<std::pair<int, std::vector<long>>> table;  // (D, h^0..h^q_max)
  std::vector<DegreeStabilization> degrees;
  bool all_stabilized = false;

  std::vector<long> values() const;
  int D0() const;  // max over degrees, -1 when not stabilized
};

// Truncated Betti numbers across a window of weight truncations; a degree
// counts as stabilized when its value is constant over `window` consecutive
// truncations ending at D_max.
BettiReport stabilized_betti(Workspace& ws, Side side, int sub, int q_max, int D_min, int D_max,
                             int window);

struct InducedPDegree {
  long h_omega = 0;
  long h_sullivan = 0;
  long rank = 0;
  bool well_defined = false;       // P maps coboundaries into coboundaries
  bool cocycles_preserved = false;  // P maps cocycles into cocycles
};

struct InducedPReport {
  int q_max = 0;
  int D = 0;
  bool chain_map = false;        // d P = P d on the truncations
  bool unit_compatible = false;  // P sends the unit to the unit
  std::vector<InducedPDegree> degrees;
  bool pass = false;
};

// The map induced by the evaluation morphism on truncated cohomology at one
// weight D, with exact well-definedness certificates.
InducedPReport induced_P_on_H(Workspace& ws, int q_max, int D);

struct StarAcyclicityEntry {
  simplicial::VertexTuple tuple;
  bool empty_star = false;
  std::vector<long> omega_betti;
  std::vector<long> sullivan_betti;
  bool ok = false;  // both sides stabilized to [1, 0, ..., 0]
};

struct StarAcyclicityReport {
  int q_max = 0;
  int D_min = 0;
  int D_max = 0;
  int window = 0;
  int p_max = 0;
  std::vector<StarAcyclicityEntry> entries;
  bool pass = false;
};

// Every non-empty closed star of an increasing tuple (p <= p_max) is acyclic
// on both sides.
StarAcyclicityReport star_acyclicity(Workspace& ws, int q_max, int D_min, int D_max, int window,
                                     int p_max);

}  // namespace derham::cohomology
