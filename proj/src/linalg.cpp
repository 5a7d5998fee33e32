#include "derham/linalg.hpp"

#include <stdexcept>

namespace derham::la {

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<int> pivot_cols;
  int ncols = 0;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Clear denominators row by row; row scaling changes neither rank, kernel,
// nor solutions of the (consistently scaled) augmented system.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

void bareiss_update_row(std::vector<std::vector<Integer>>& rows, int r, int c, int i, int ncols,
                        const Integer& prev) {
  Integer t;
  for (int j = c + 1; j < ncols; ++j) {
    t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
    mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  }
  rows[i][c] = 0;
}

// Fraction-free row echelon form.  Only columns < pivot_limit are eligible as
// pivot columns (the tail holds right-hand sides during solves).
Echelon echelonize(std::vector<std::vector<Integer>> rows, int ncols, int pivot_limit, bool parallel) {
  Echelon e;
  e.ncols = ncols;
  const int nr = static_cast<int>(rows.size());
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < pivot_limit && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int i = r + 1; i < nr; ++i) bareiss_update_row(rows, r, c, i, ncols, prev);
    } else {
      for (int i = r + 1; i < nr; ++i) bareiss_update_row(rows, r, c, i, ncols, prev);
    }
    prev = rows[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

Echelon echelonize(const QMatrix& m, bool parallel) {
  return echelonize(integer_rows(m), m.cols(), m.cols(), parallel);
}

// Back-substitution over the rationals for one kernel vector (unit at the
// free column f, zero at the other free columns).
std::vector<Rational> kernel_vector(const Echelon& e, int n, int f) {
  std::vector<Rational> x(n, Rational(0));
  x[f] = 1;
  for (int k = e.rank() - 1; k >= 0; --k) {
    const int c = e.pivot_cols[k];
    Rational acc = 0;
    for (int j = c + 1; j < n; ++j)
      if (e.rows[k][j] != 0 && x[j] != 0) acc += Rational(e.rows[k][j]) * x[j];
    x[c] = -acc / Rational(e.rows[k][c]);
  }
  return x;
}

RankDecomposition decompose(const QMatrix& m, bool parallel) {
  const Echelon e = echelonize(m, parallel);
  RankDecomposition d;
  d.rank = e.rank();
  std::vector<int> free_cols;
  {
    size_t k = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (k < e.pivot_cols.size() && e.pivot_cols[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  d.kernel = QMatrix(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    const auto x = kernel_vector(e, m.cols(), free_cols[fi]);
    for (int i = 0; i < m.cols(); ++i) d.kernel(i, static_cast<int>(fi)) = x[i];
  }
  d.image = QMatrix(m.rows(), d.rank);
  for (int k = 0; k < d.rank; ++k)
    for (int i = 0; i < m.rows(); ++i) d.image(i, k) = m(i, e.pivot_cols[k]);
  return d;
}

}  // namespace

int rank(const QMatrix& m) { return echelonize(m, true).rank(); }
int rank_serial(const QMatrix& m) { return echelonize(m, false).rank(); }

RankDecomposition rank_kernel_image(const QMatrix& m) { return decompose(m, true); }
RankDecomposition rank_kernel_image_serial(const QMatrix& m) { return decompose(m, false); }

std::optional<QMatrix> multi_solve(const QMatrix& m, const QMatrix& rhs) {
  if (rhs.rows() != m.rows()) throw std::invalid_argument("rhs shape mismatch in multi_solve");
  const int n = m.cols();
  const int k = rhs.cols();
  QMatrix aug(m.rows(), n + k);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, rhs);
  const Echelon e = echelonize(integer_rows(aug), n + k, n, true);
  for (int i = e.rank(); i < m.rows(); ++i)
    for (int j = n; j < n + k; ++j)
      if (e.rows[i][j] != 0) return std::nullopt;
  QMatrix x(n, k);
  for (int col = 0; col < k; ++col) {
    for (int r = e.rank() - 1; r >= 0; --r) {
      const int c = e.pivot_cols[r];
      Rational acc = Rational(e.rows[r][n + col]);
      for (int j = c + 1; j < n; ++j)
        if (e.rows[r][j] != 0 && x(j, col) != 0) acc -= Rational(e.rows[r][j]) * x(j, col);
      x(c, col) = acc / Rational(e.rows[r][c]);
    }
  }
  return x;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch in solve");
  QMatrix rhs(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) rhs(i, 0) = b[i];
  auto x = multi_solve(m, rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> v(m.cols());
  for (int i = 0; i < m.cols(); ++i) v[i] = (*x)(i, 0);
  return v;
}

namespace {

// Reduced row echelon form in plain rational arithmetic (quotient spaces are
// small); returns the pivot columns.
std::vector<int> rref(QMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const Rational inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QuotientSpace quotient_space(int ambient_dim, const QMatrix& relations) {
  if (relations.cols() != ambient_dim && relations.rows() != 0)
    throw std::invalid_argument("relations shape mismatch in quotient_space");
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.relations = relations;
  QMatrix a = relations;
  const std::vector<int> pivots = rref(a);
  {
    size_t k = 0;
    for (int c = 0; c < ambient_dim; ++c) {
      if (k < pivots.size() && pivots[k] == c)
        ++k;
      else
        q.coset_cols.push_back(c);
    }
  }
  const int dim = static_cast<int>(q.coset_cols.size());
  q.coords = QMatrix(dim, ambient_dim);
  for (int i = 0; i < dim; ++i) q.coords(i, q.coset_cols[i]) = 1;
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < dim; ++i) q.coords(i, pivots[k]) = -a(static_cast<int>(k), q.coset_cols[i]);
  q.coset_basis = QMatrix(ambient_dim, dim);
  for (int i = 0; i < dim; ++i) q.coset_basis(q.coset_cols[i], i) = 1;
  q.projection = mul(q.coset_basis, q.coords);
  return q;
}

}  // namespace derham::la
