#pragma once

#include <optional>
#include <vector>

#include "derham/matrix.hpp"

namespace derham::la {

// Exact rank / kernel / image of a rational matrix, computed by fraction-free
// (Bareiss) elimination on the denominator-cleared integer matrix.  Pivoting
// is deterministic: columns are visited left to right and the first row with
// a non-zero entry is chosen, so the same input always yields the same bases.
struct RankDecomposition {
  int rank = 0;
  QMatrix kernel;  // cols = kernel basis vectors (one per free column, in column order)
  QMatrix image;   // cols = the original matrix columns at the pivot positions
};

int rank(const QMatrix& m);
RankDecomposition rank_kernel_image(const QMatrix& m);

// Solves m x = b.  Free variables are set to zero, which makes the returned
// solution a deterministic function of (m, b).  Returns nullopt when the
// system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);

// Simultaneous solve for every column of rhs (one elimination shared by all
// right-hand sides).  Returns nullopt if any column is inconsistent.
std::optional<QMatrix> multi_solve(const QMatrix& m, const QMatrix& rhs);

// Serial reference entry points (no OpenMP in the elimination inner loop);
// used by tests and the kernel benchmark to cross-check the parallel path.
int rank_serial(const QMatrix& m);
RankDecomposition rank_kernel_image_serial(const QMatrix& m);

// A finite-dimensional quotient ambient / row-span(relations), with a chosen
// coset basis (the non-pivot coordinates of the reduced row echelon form).
struct QuotientSpace {
  int ambient_dim = 0;
  QMatrix relations;
  std::vector<int> coset_cols;  // ambient indices of the coset basis, increasing
  QMatrix coords;               // dim x ambient: coordinates of a class
  QMatrix coset_basis;          // ambient x dim: unit vectors at coset_cols
  QMatrix projection;           // ambient x ambient, idempotent, == coset_basis * coords
  int dim() const { return static_cast<int>(coset_cols.size()); }
};

QuotientSpace quotient_space(int ambient_dim, const QMatrix& relations);

}  // namespace derham::la
