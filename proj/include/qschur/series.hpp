#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <vector>

#include "qschur/qmatrix.hpp"
#include "qschur/quat.hpp"

namespace qschur {

// Coefficient helpers shared by scalar and matrix series.
inline Quaternion coeff_adjoint(const Quaternion& a) { return a.conj(); }
inline QMatrix coeff_adjoint(const QMatrix& a) { return a.adjoint(); }
inline double coeff_norm(const Quaternion& a) { return a.norm(); }
inline double coeff_norm(const QMatrix& a) { return a.max_abs(); }
inline Quaternion coeff_zero_like(const Quaternion&) { return {}; }
inline QMatrix coeff_zero_like(const QMatrix& a) { return QMatrix(a.rows(), a.cols()); }
inline bool coeff_same_shape(const Quaternion&, const Quaternion&) { return true; }
inline bool coeff_same_shape(const QMatrix& a, const QMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

// Truncated left power series sum_{n<=N} p^n a_n.
template <class T>
class LeftSeries {
 public:
  LeftSeries() : c_(1, T{}) {}
  explicit LeftSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, T{});
    for (const T& e : c_)
      if (!coeff_same_shape(e, c_.front()))
        throw ShapeMismatchError("series coefficients must share one shape");
  }

  static LeftSeries constant(const T& value, int degree = 0) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, coeff_zero_like(value));
    c[0] = value;
    return LeftSeries(std::move(c));
  }

  static LeftSeries monomial(int k, const T& value, int degree) {
    if (degree < k) degree = k;
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, coeff_zero_like(value));
    c[static_cast<std::size_t>(k)] = value;
    return LeftSeries(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& coeff(int n) const { return c_[static_cast<std::size_t>(n)]; }
  T& coeff(int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<T>& coeffs() const { return c_; }

  double max_coeff_norm() const {
    double m = 0;
    for (const T& e : c_) m = std::max(m, coeff_norm(e));
    return m;
  }

  LeftSeries truncated(int degree) const {
    if (degree >= this->degree()) return *this;
    std::vector<T> c(c_.begin(), c_.begin() + degree + 1);
    return LeftSeries(std::move(c));
  }

 private:
  std::vector<T> c_;
};

// Truncated right power series sum_{n<=N} b_n qbar^n.
template <class T>
class RightSeries {
 public:
  RightSeries() : c_(1, T{}) {}
  explicit RightSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, T{});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& coeff(int n) const { return c_[static_cast<std::size_t>(n)]; }
  T& coeff(int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<T>& coeffs() const { return c_; }

 private:
  std::vector<T> c_;
};

using LSeries = LeftSeries<Quaternion>;
using MatSeries = LeftSeries<QMatrix>;
using RSeries = RightSeries<Quaternion>;
using MatRSeries = RightSeries<QMatrix>;

constexpr int kDefaultDegree = 64;

// Cauchy convolution truncated to the shorter operand; the left factor's
// coefficients multiply on the left.
template <class T>
LeftSeries<T> star_mul(const LeftSeries<T>& f, const LeftSeries<T>& g);

// Same convolution for right series (the variable sits on the other side; the
// coefficient order is unchanged).
template <class T>
RightSeries<T> star_mul_right(const RightSeries<T>& f, const RightSeries<T>& g);

// Coefficient-wise conjugate f^c of a scalar series.
LSeries conj_series(const LSeries& f);

// Entrywise conjugate-transpose of a matrix series, as a right series.
MatRSeries adjoint_series(const MatSeries& f);
RSeries adjoint_series(const LSeries& f);

// f^s = f^c * f; the result has real coefficients (asserted within 1e-12).
LSeries symmetrize(const LSeries& f);

// Left star reciprocal (f^s)^{-1} f^c; exact to the truncation degree.
LSeries star_inv(const LSeries& f);
// Matrix variant via the direct convolution recursion on g with f*g = I.
MatSeries star_inv(const MatSeries& f);

template <class T>
T eval(const LeftSeries<T>& f, const Quaternion& p);
template <class T>
T eval(const RightSeries<T>& f, const Quaternion& q);

// Geometric tail estimate M r^{N+1}/(1-r) with M = max coefficient norm.
template <class T>
double tail_bound(const LeftSeries<T>& f, double r);

template <class T>
LeftSeries<T> backward_shift(const LeftSeries<T>& f);

template <class T>
LeftSeries<T> star_power(const LeftSeries<T>& f, int m);

template <class T>
LeftSeries<T> operator+(const LeftSeries<T>& f, const LeftSeries<T>& g);
template <class T>
LeftSeries<T> operator-(const LeftSeries<T>& f, const LeftSeries<T>& g);

// Complex-coefficient halves of the restriction to a slice plane.
struct SplitSeries {
  std::vector<std::complex<double>> f;  // alpha_n, in C_I
  std::vector<std::complex<double>> g;  // beta_n, in C_I, right factor J
};

// Coefficient-wise decomposition a_n = alpha_n + beta_n J with alpha, beta in
// C_I; requires J orthogonal to I.
SplitSeries restrict_split(const LSeries& f, const ImagUnit& i_dir, const ImagUnit& j_dir);

// Inverse of restrict_split.
LSeries assemble_split(const SplitSeries& s, const ImagUnit& i_dir, const ImagUnit& j_dir);

// Slice extension: given f(z) and f(zbar) for z = x + I y on C_I, the value at
// p = x + I_p y.  For real p the slice value is returned unchanged.
Quaternion ext_from_slice(const Quaternion& f_z, const Quaternion& f_zbar, const ImagUnit& i_dir,
                          const Quaternion& p);

// True iff every coefficient is real within tol (the power-series criterion
// for maps preserving each slice plane).
bool is_slice_preserving(const LSeries& f, double tol = 1e-12);

// Batch evaluation at many points; parallel path with a serial twin.
std::vector<Quaternion> eval_batch(const LSeries& f, std::span<const Quaternion> points);
std::vector<Quaternion> eval_batch_serial(const LSeries& f, std::span<const Quaternion> points);

// sum_n p^n A^n truncated; the left star reciprocal of I - pA.
MatSeries neumann_series(const QMatrix& a, int degree);

namespace detail {
// Reciprocal of a power series with nonzero real constant term, by long division.
std::vector<double> invert_real_series(const std::vector<double>& s);
}  // namespace detail

// ---- template definitions ----

template <class T>
LeftSeries<T> star_mul(const LeftSeries<T>& f, const LeftSeries<T>& g) {
  const int n = std::min(f.degree(), g.degree());
  const T probe = f.coeff(0) * g.coeff(0);  // shape check; throws on mismatch
  std::vector<T> c(static_cast<std::size_t>(n) + 1, coeff_zero_like(probe));
  for (int k = 0; k <= n; ++k) {
    T acc = coeff_zero_like(probe);
    for (int r = 0; r <= k; ++r) acc += f.coeff(r) * g.coeff(k - r);
    c[static_cast<std::size_t>(k)] = acc;
  }
  return LeftSeries<T>(std::move(c));
}

template <class T>
RightSeries<T> star_mul_right(const RightSeries<T>& f, const RightSeries<T>& g) {
  const int n = std::min(f.degree(), g.degree());
  const T probe = f.coeff(0) * g.coeff(0);
  std::vector<T> c(static_cast<std::size_t>(n) + 1, coeff_zero_like(probe));
  for (int k = 0; k <= n; ++k) {
    T acc = coeff_zero_like(probe);
    for (int r = 0; r <= k; ++r) acc += f.coeff(r) * g.coeff(k - r);
    c[static_cast<std::size_t>(k)] = acc;
  }
  return RightSeries<T>(std::move(c));
}

namespace detail {
inline Quaternion scalar_mul(const Quaternion& p, const Quaternion& v) { return p * v; }
inline QMatrix scalar_mul(const Quaternion& p, const QMatrix& v) { return p * v; }
inline Quaternion scalar_mul_right(const Quaternion& v, const Quaternion& q) { return v * q; }
inline QMatrix scalar_mul_right(const QMatrix& v, const Quaternion& q) { return v * q; }
}  // namespace detail

template <class T>
T eval(const LeftSeries<T>& f, const Quaternion& p) {
  T acc = f.coeff(f.degree());
  for (int n = f.degree() - 1; n >= 0; --n) acc = f.coeff(n) + detail::scalar_mul(p, acc);
  return acc;
}

template <class T>
T eval(const RightSeries<T>& f, const Quaternion& q) {
  const Quaternion qbar = q.conj();
  T acc = f.coeff(f.degree());
  for (int n = f.degree() - 1; n >= 0; --n) acc = f.coeff(n) + detail::scalar_mul_right(acc, qbar);
  return acc;
}

template <class T>
double tail_bound(const LeftSeries<T>& f, double r) {
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double m = f.max_coeff_norm();
  return m * std::pow(r, f.degree() + 1) / (1.0 - r);
}

template <class T>
LeftSeries<T> backward_shift(const LeftSeries<T>& f) {
  if (f.degree() == 0) return LeftSeries<T>::constant(coeff_zero_like(f.coeff(0)));
  std::vector<T> c(f.coeffs().begin() + 1, f.coeffs().end());
  return LeftSeries<T>(std::move(c));
}

namespace detail {
inline Quaternion coeff_one_like(const Quaternion&) { return Quaternion(1); }
inline QMatrix coeff_one_like(const QMatrix& a) {
  if (!a.is_square()) throw ShapeMismatchError("star_power needs square coefficients");
  return QMatrix::identity(a.rows());
}
}  // namespace detail

template <class T>
LeftSeries<T> star_power(const LeftSeries<T>& f, int m) {
  LeftSeries<T> acc = LeftSeries<T>::constant(detail::coeff_one_like(f.coeff(0)), f.degree());
  for (int k = 0; k < m; ++k) acc = star_mul(acc, f);
  return acc;
}

template <class T>
LeftSeries<T> operator+(const LeftSeries<T>& f, const LeftSeries<T>& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<T> c(static_cast<std::size_t>(n) + 1, coeff_zero_like(f.coeff(0)));
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) + g.coeff(k);
  return LeftSeries<T>(std::move(c));
}

template <class T>
LeftSeries<T> operator-(const LeftSeries<T>& f, const LeftSeries<T>& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<T> c(static_cast<std::size_t>(n) + 1, coeff_zero_like(f.coeff(0)));
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) - g.coeff(k);
  return LeftSeries<T>(std::move(c));
}

}  // namespace qschur
