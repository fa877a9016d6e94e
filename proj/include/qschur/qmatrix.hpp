#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qschur/quat.hpp"

namespace qschur {

// Dense quaternionic matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> d);
  static QMatrix scalar(const Quaternion& q);  // 1x1
  static QMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return e_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  std::span<const Quaternion> entries() const { return e_; }
  std::span<Quaternion> entries() { return e_; }

  QMatrix adjoint() const;

  double frobenius_norm() const;
  double max_abs() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

  bool is_hermitian(double tol) const;
  // Hermitian with J*J = I.
  bool is_signature(double tol = 1e-10) const;

  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QMatrix column(std::size_t c) const;
  QMatrix row(std::size_t r) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Quaternion> e_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Quaternion& s, QMatrix a);  // scalar on the left of every entry
QMatrix operator*(QMatrix a, const Quaternion& s);  // scalar on the right
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(QMatrix a, double s);
QMatrix operator-(QMatrix a);

// max-norm distance; throws ShapeMismatchError on incompatible shapes.
double max_abs_diff(const QMatrix& a, const QMatrix& b);

// Horizontal / vertical concatenation.
QMatrix hcat(const QMatrix& a, const QMatrix& b);
QMatrix vcat(const QMatrix& a, const QMatrix& b);
// diag(a, b) block matrix.
QMatrix block_diag(const QMatrix& a, const QMatrix& b);

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace qschur
