#include "qschur/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>

namespace qschur {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw ShapeMismatchError("entry count does not match rows*cols");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1);
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::scalar(const Quaternion& q) {
  QMatrix m(1, 1);
  m(0, 0) = q;
  return m;
}

QMatrix QMatrix::ones(std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (auto& e : m.e_) e = Quaternion(1);
  return m;
}

QMatrix QMatrix::adjoint() const {
  QMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

double QMatrix::frobenius_norm() const {
  double s = 0;
  for (const auto& e : e_) s += e.norm_sq();
  return std::sqrt(s);
}

double QMatrix::max_abs() const {
  double m = 0;
  for (const auto& e : e_) m = std::max(m, e.norm());
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatchError("matrix addition");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatchError("matrix subtraction");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

bool QMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (((*this)(r, c) - (*this)(c, r).conj()).norm() > tol) return false;
  return true;
}

bool QMatrix::is_signature(double tol) const {
  if (!is_square()) return false;
  if (!is_hermitian(tol)) return false;
  const QMatrix sq = (*this) * (*this);
  return max_abs_diff(sq, identity(rows_)) <= tol;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

QMatrix QMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }
QMatrix QMatrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatchError("matrix product");
  QMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion& ark = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

QMatrix operator*(const Quaternion& s, QMatrix a) {
  for (auto& e : a.entries()) e = s * e;
  return a;
}

QMatrix operator*(QMatrix a, const Quaternion& s) {
  for (auto& e : a.entries()) e = e * s;
  return a;
}

QMatrix operator*(double s, QMatrix a) {
  for (auto& e : a.entries()) e *= s;
  return a;
}

QMatrix operator*(QMatrix a, double s) { return s * std::move(a); }

QMatrix operator-(QMatrix a) {
  for (auto& e : a.entries()) e = -e;
  return a;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatchError("matrix comparison");
  double m = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, (a.entries()[i] - b.entries()[i]).norm());
  return m;
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatchError("hcat");
  QMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

QMatrix vcat(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeMismatchError("vcat");
  QMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
  }
  return os << "]";
}

}  // namespace qschur
