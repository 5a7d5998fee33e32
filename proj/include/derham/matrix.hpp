#pragma once

#include <cstddef>
#include <vector>

#include "derham/rational.hpp"

namespace derham::la {

// Dense rational matrix, row-major.  Dimensions may be zero in either
// direction; such matrices still compose correctly.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const;
  QMatrix transpose() const;

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;

  // Writes `b` into this matrix with its (0,0) entry at (r0,c0).
  void set_block(int r0, int c0, const QMatrix& b);
  void add_block(int r0, int c0, const QMatrix& b);

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  QMatrix column(int j) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Matrix product.  `mul` parallelizes over rows with OpenMP; `mul_serial` is
// the plain reference kernel kept for cross-checking and benchmarks.  Both
// produce identical results.
QMatrix mul(const QMatrix& a, const QMatrix& b);
QMatrix mul_serial(const QMatrix& a, const QMatrix& b);

}  // namespace derham::la
