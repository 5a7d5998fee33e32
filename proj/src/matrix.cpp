#include "derham/matrix.hpp"

#include <stdexcept>

namespace derham::la {

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
  return r;
}

void QMatrix::set_block(int r0, int c0, const QMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void QMatrix::add_block(int r0, int c0, const QMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) += b(i, j);
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch in apply");
  std::vector<Rational> y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

QMatrix QMatrix::column(int j) const {
  QMatrix c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

static void mul_row(const QMatrix& a, const QMatrix& b, QMatrix& c, int i) {
  for (int k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (aik == 0) continue;
    for (int j = 0; j < b.cols(); ++j) {
      const Rational& bkj = b(k, j);
      if (bkj != 0) c(i, j) += aik * bkj;
    }
  }
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in mul");
  QMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < a.rows(); ++i) mul_row(a, b, c, i);
  return c;
}

QMatrix mul_serial(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in mul");
  QMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) mul_row(a, b, c, i);
  return c;
}

}  // namespace derham::la
