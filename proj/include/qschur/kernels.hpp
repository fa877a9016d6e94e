#pragma once

#include <cstdint>
#include <vector>

#include "qschur/qlinalg.hpp"
#include "qschur/series.hpp"

namespace qschur {

// Bivariate coefficient kernel K(p,q) = sum_{m,n} p^m K_{mn} qbar^n with
// Hermitian symmetry K_{mn} = K_{nm}^*.
class KernelSeries {
 public:
  KernelSeries(int degree, std::size_t dim);

  static KernelSeries from_grid(int degree, std::size_t dim, std::vector<QMatrix> grid,
                                double herm_tol = 1e-12);

  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }

  const QMatrix& coeff(int m, int n) const {
    return k_[static_cast<std::size_t>(m) * (degree_ + 1) + static_cast<std::size_t>(n)];
  }
  QMatrix& coeff(int m, int n) {
    return k_[static_cast<std::size_t>(m) * (degree_ + 1) + static_cast<std::size_t>(n)];
  }

  double max_coeff_norm() const;

  // sum_m z^m (sum_n K_{mn} wbar^n), both sums by Horner.
  QMatrix evaluate(const Quaternion& z, const Quaternion& w) const;

  // Bound on the dropped terms when evaluating at radius r < 1.
  double tail_bound(double r) const;

 private:
  int degree_;
  std::size_t dim_;
  std::vector<QMatrix> k_;
};

// Value of the Hardy-space kernel: both closed forms are computed and must
// agree within 1e-12; throws PoleSphereError on the pole sphere.
Quaternion hardy_kernel(const Quaternion& p, const Quaternion& q);

// The coefficient grid of the Hardy kernel (identity on the diagonal).
KernelSeries hardy_kernel_series(int degree, std::size_t dim = 1, double scale = 1.0);

// Kernel with numerator J2 - Theta(p) J1 Theta(q)^* transported by the
// geometric shift; J1 and J2 must be signature matrices.
KernelSeries schur_kernel(const MatSeries& theta, const QMatrix& j1, const QMatrix& j2);
KernelSeries schur_kernel_serial(const MatSeries& theta, const QMatrix& j1, const QMatrix& j2);
KernelSeries schur_kernel(const LSeries& theta);  // scalar, J1 = J2 = 1

// Kernel with numerator phi(p) J + J phi(q)^*.
KernelSeries cara_kernel(const MatSeries& phi, const QMatrix& j);

struct GramSample {
  std::vector<Quaternion> points;
  std::vector<QMatrix> vectors;  // unit columns in H^dim
  QMatrix gram;                  // entries c_l^* K(z_l, z_j) c_j
  double tail_bound;
};

// Dense Hermitian Gram matrix of kernel columns; throws RadiusTooLargeError
// when the truncation bound at max|point| exceeds max_tail.
GramSample gram_sample(const KernelSeries& k, std::vector<Quaternion> points,
                       std::vector<QMatrix> vectors, double max_tail = 1e-8);
GramSample gram_sample_serial(const KernelSeries& k, std::vector<Quaternion> points,
                              std::vector<QMatrix> vectors, double max_tail = 1e-8);

struct NegSquaresReport {
  int count = 0;          // max observed over the trials (a lower bound for kappa)
  int witness_trial = -1;
  int stable_trials = 0;  // how many trials attained the max
  GramSample witness;
};

// Monte-Carlo lower bound for the number of negative squares: the max of
// neg_squares over `trials` random Gram samples.
NegSquaresReport kernel_neg_squares(const KernelSeries& k, int trials, std::uint64_t seed,
                                    int sample_size = 50, double radius = 0.7);

// Coefficients (in the first variable) of K1(., q) star_r phi(q)^* d: the
// adjoint of slice multiplication by phi applied to a kernel column.
MatSeries mult_adjoint_apply(const MatSeries& phi, const KernelSeries& k1, const Quaternion& q,
                             const QMatrix& d);

// K2 - (1/bound^2) phi * K1 *_r phi^*; positive iff multiplication by phi has
// norm <= bound between the kernels' spaces.
KernelSeries contraction_defect_kernel(const MatSeries& phi, const KernelSeries& k1,
                                       const KernelSeries& k2, double bound = 1.0);

}  // namespace qschur
