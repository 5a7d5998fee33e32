#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "derham/sullivan.hpp"

namespace derham {

enum class Side { omega, sullivan };

inline std::string side_name(Side s) { return s == Side::omega ? "omega" : "sullivan"; }

// Per-complex cache of subcomplex presentations, glued-family spaces and the
// structural matrices between them.  Everything inside is deterministic, so
// caching is purely an evaluation-order optimization.  Not thread-safe; the
// parallelism lives in the exact linear algebra kernels underneath.
class Workspace {
 public:
  explicit Workspace(simplicial::SimplicialComplex x);

  const simplicial::SimplicialComplex& complex() const { return x_; }
  int vertex_count() const { return x_.vertex_count(); }

  // Subcomplex registry; id 0 is the whole complex.
  int sub_id(const simplicial::Subcomplex& s);
  int star_id(const simplicial::VertexTuple& u);
  const simplicial::SimplicialComplex& sub_complex(int id) const { return subs_[id].cx; }
  bool sub_empty(int id) const { return subs_[id].cx.empty(); }

  const omega::OmegaPresentation& pres(int id);
  const sullivan::ASpace& a_space(int id, int q, int D);
  const omega::PartitionOfUnity& pou();

  int space_dim(Side side, int id, int q, int D);

  // Structural matrices, all cached: restriction along a subcomplex inclusion
  // (from must contain to), its distinguished right inverse, the
  // differential, the inclusion of a shallower truncation, and multiplication
  // by the homotopy weight (rho_v on the omega side, t_v on the sullivan
  // side; v is a vertex index of the top complex).
  const la::QMatrix& restriction(Side side, int from_id, int to_id, int q, int D);
  const la::QMatrix& extension(Side side, int from_id, int to_id, int q, int D);
  const la::QMatrix& d_matrix(Side side, int id, int q, int D);
  const la::QMatrix& inclusion(Side side, int id, int q, int D, int D2);
  const la::QMatrix& mult_weight(Side side, int id, int v, int q, int D, int D2);

  // Evaluation morphism on the top complex, omega coords -> family coords.
  const la::QMatrix& P_matrix(int q, int D);

  // Truncation-weight shift of the side's contracting homotopy.
  int homotopy_shift(Side side) const {
    return side == Side::omega ? vertex_count() + 1 : 1;
  }

 private:
  struct SubEntry {
    simplicial::Subcomplex sub;
    simplicial::SimplicialComplex cx;
    std::unique_ptr<omega::OmegaPresentation> pres;
    std::map<std::pair<int, int>, sullivan::ASpace> aspaces;
  };

  simplicial::SimplicialComplex x_;
  std::vector<SubEntry> subs_;
  std::map<std::vector<simplicial::VertexSet>, int> sub_index_;
  std::map<std::vector<int>, int> star_index_;
  std::unique_ptr<omega::PartitionOfUnity> pou_;

  std::map<std::tuple<int, int, int, int, int>, la::QMatrix> restrict_;
  std::map<std::tuple<int, int, int, int, int>, la::QMatrix> extend_;
  std::map<std::tuple<int, int, int, int>, la::QMatrix> d_;
  std::map<std::tuple<int, int, int, int, int>, la::QMatrix> incl_;
  std::map<std::tuple<int, int, int, int, int, int>, la::QMatrix> mult_;
  std::map<std::pair<int, int>, la::QMatrix> p_;
};

}  // namespace derham
