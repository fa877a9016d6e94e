#include "qschur/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace qschur {

namespace {

using cplx = std::complex<double>;

// Eigendecomposition of chi(A) for Hermitian A, with the pairing check.
struct ChiEigen {
  Eigen::VectorXd values;   // ascending, size 2n
  Eigen::MatrixXcd vectors;
  double scale;             // |A|_F, for tolerance scaling
};

ChiEigen chi_eigen(const QMatrix& a, double tol, const char* who) {
  const double scale = a.frobenius_norm();
  QMatrix herm_gap = a - a.adjoint();
  if (herm_gap.frobenius_norm() > tol * std::max(scale, 1e-30) && herm_gap.frobenius_norm() > tol) {
    std::ostringstream os;
    os << who << ": |A - A*| = " << herm_gap.frobenius_norm() << " exceeds " << tol
       << " * |A| = " << tol * scale;
    throw NotHermitianError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(a));
  if (es.info() != Eigen::Success) throw InternalError("Hermitian eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors(), scale};
}

// Collapse the doubled spectrum of chi(A) to quaternionic eigenvalues.
std::vector<double> halved_eigenvalues(const ChiEigen& ce) {
  const double pair_tol = 1e-8 * ce.scale + 1e-13;
  const auto n2 = ce.values.size();
  if (n2 % 2 != 0) throw OddMultiplicityError("complex adjoint has odd dimension");
  std::vector<double> halved;
  halved.reserve(n2 / 2);
  for (Eigen::Index i = 0; i + 1 < n2; i += 2) {
    const double lo = ce.values[i], hi = ce.values[i + 1];
    if (hi - lo > pair_tol) {
      std::ostringstream os;
      os << "eigenvalue " << lo << " is unpaired (gap " << hi - lo << " > " << pair_tol << ")";
      throw OddMultiplicityError(os.str());
    }
    halved.push_back(0.5 * (lo + hi));
  }
  return halved;
}

// f applied on the spectrum of a Hermitian matrix, mapped back through chi.
template <class F>
QMatrix herm_apply(const QMatrix& a, double tol, const char* who, F&& f) {
  if (a.rows() == 0) return a;
  const ChiEigen ce = chi_eigen(a, 1e-8, who);
  Eigen::VectorXd d(ce.values.size());
  for (Eigen::Index i = 0; i < ce.values.size(); ++i) d[i] = f(ce.values[i]);
  const Eigen::MatrixXcd m =
      ce.vectors * d.asDiagonal() * ce.vectors.adjoint();
  (void)tol;
  return from_complex_adjoint(m);
}

void require_positive(const QMatrix& a, double tol, const char* who) {
  if (a.rows() == 0) return;
  const ChiEigen ce = chi_eigen(a, 1e-8, who);
  if (ce.values.minCoeff() <= tol * std::max(ce.scale, 1.0)) {
    std::ostringstream os;
    os << who << ": smallest eigenvalue " << ce.values.minCoeff() << " is not strictly positive";
    throw NotPositiveError(os.str());
  }
}

}  // namespace

Eigen::MatrixXcd complex_adjoint(const QMatrix& a) {
  const auto r = static_cast<Eigen::Index>(a.rows());
  const auto c = static_cast<Eigen::Index>(a.cols());
  Eigen::MatrixXcd m(2 * r, 2 * c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      const Quaternion& q = a(i, j);
      const cplx a1(q.w, q.x), a2(q.y, q.z);
      m(i, j) = a1;
      m(i, c + j) = a2;
      m(r + i, j) = -std::conj(a2);
      m(r + i, c + j) = std::conj(a1);
    }
  return m;
}

QMatrix from_complex_adjoint(const Eigen::MatrixXcd& m) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0)
    throw ShapeMismatchError("complex adjoint must have even dimensions");
  const Eigen::Index r = m.rows() / 2, c = m.cols() / 2;
  QMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      const cplx a1 = 0.5 * (m(i, j) + std::conj(m(r + i, c + j)));
      const cplx a2 = 0.5 * (m(i, c + j) - std::conj(m(r + i, j)));
      a(i, j) = Quaternion(a1.real(), a1.imag(), a2.real(), a2.imag());
    }
  return a;
}

Spectrum herm_eigen(const QMatrix& a, double tol) {
  Spectrum sp;
  if (a.rows() == 0) return sp;
  const ChiEigen ce = chi_eigen(a, tol, "herm_eigen");
  const std::vector<double> vals = halved_eigenvalues(ce);
  const double cluster_tol = 1e-8 * ce.scale + 1e-13;
  for (double v : vals) {
    if (!sp.eigenvalues.empty() && v - sp.eigenvalues.back() <= cluster_tol) {
      ++sp.multiplicities.back();
    } else {
      sp.eigenvalues.push_back(v);
      sp.multiplicities.push_back(1);
    }
  }
  return sp;
}

int neg_squares(const QMatrix& a, double tol) {
  if (a.rows() == 0) return 0;
  const ChiEigen ce = chi_eigen(a, 1e-8, "neg_squares");
  int count = 0;
  for (double v : halved_eigenvalues(ce))
    if (v < -tol) ++count;
  return count;
}

QMatrix sqrt_pd(const QMatrix& a, double tol) {
  require_positive(a, tol, "sqrt_pd");
  return herm_apply(a, tol, "sqrt_pd", [](double v) { return std::sqrt(std::max(v, 0.0)); });
}

QMatrix inv_sqrt_pd(const QMatrix& a, double tol) {
  require_positive(a, tol, "inv_sqrt_pd");
  return herm_apply(a, tol, "inv_sqrt_pd", [](double v) { return 1.0 / std::sqrt(v); });
}

QMatrix inv_pd(const QMatrix& a, double tol) {
  require_positive(a, tol, "inv_pd");
  return herm_apply(a, tol, "inv_pd", [](double v) { return 1.0 / v; });
}

QMatrix inverse(const QMatrix& a) {
  if (!a.is_square()) throw ShapeMismatchError("inverse of a non-square matrix");
  if (a.rows() == 0) return a;
  const Eigen::MatrixXcd chi = complex_adjoint(a);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(chi);
  const Eigen::MatrixXcd inv = lu.inverse();
  const double residual = (chi * inv - Eigen::MatrixXcd::Identity(chi.rows(), chi.cols())).norm();
  if (!std::isfinite(residual) || residual > 1e-8 * std::max(1.0, chi.norm()))
    throw NotPDError("matrix is numerically singular");
  return from_complex_adjoint(inv);
}

QMatrix solve_stein(const QMatrix& a, const QMatrix& q, double tol) {
  if (!a.is_square() || a.rows() != q.rows() || !q.is_square())
    throw ShapeMismatchError("solve_stein expects square A and Q of equal size");
  if (!q.is_hermitian(1e-10 * std::max(1.0, q.frobenius_norm())))
    throw NotHermitianError("solve_stein: Q is not Hermitian");
  QMatrix p = q;
  QMatrix term = q;
  const QMatrix a_star = a.adjoint();
  double prev_norm = term.frobenius_norm();
  if (prev_norm == 0.0) return p;
  for (int n = 1; n <= 1000; ++n) {
    term = a_star * term * a;
    p += term;
    const double tn = term.frobenius_norm();
    if (tn == 0.0) return p;
    const double ratio = std::min(tn / prev_norm, 1.0 - 1e-9);
    prev_norm = tn;
    const double rho_hat = std::sqrt(ratio);
    if (tn < tol * (1.0 - rho_hat)) return p;
  }
  throw NotConvergentError("solve_stein: 1000 terms without meeting the bound (spectral radius too close to 1?)");
}

QMatrix gram_schmidt_complete(const QMatrix& t) {
  const std::size_t rows = t.rows(), cols = t.cols();
  if (rows != cols + 1) throw ShapeMismatchError("gram_schmidt_complete expects an (n+1) x n matrix");
  if (cols > 0) {
    const QMatrix gram = t.adjoint() * t;
    if (max_abs_diff(gram, QMatrix::identity(cols)) > 1e-8)
      throw NotIsometricError("gram_schmidt_complete: T*T deviates from the identity by more than 1e-8");
  }
  // Seed with the first canonical basis vector whose residual survives
  // projection; deterministic by construction.
  QMatrix h(rows, 1);
  bool found = false;
  for (std::size_t seed = 0; seed < rows && !found; ++seed) {
    QMatrix r(rows, 1);
    r(seed, 0) = Quaternion(1);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < cols; ++c) {
        Quaternion coef{};
        for (std::size_t k = 0; k < rows; ++k) coef += t(k, c).conj() * r(k, 0);
        for (std::size_t k = 0; k < rows; ++k) r(k, 0) -= t(k, c) * coef;
      }
    }
    if (r.frobenius_norm() > 1e-6) {
      h = r;
      found = true;
    }
  }
  if (!found) throw NotIsometricError("gram_schmidt_complete: no canonical vector survives projection");
  const double n = h.frobenius_norm();
  for (std::size_t k = 0; k < rows; ++k) h(k, 0) *= 1.0 / n;
  // Phase convention: last nonzero entry real positive.
  for (std::size_t k = rows; k-- > 0;) {
    const Quaternion last = h(k, 0);
    if (last.norm() > 1e-12) {
      const Quaternion u = last.conj() * (1.0 / last.norm());
      h = h * u;
      break;
    }
  }
  return h;
}

QMatrix gram_schmidt_orthonormalize(const QMatrix& a) {
  QMatrix q = a;
  const std::size_t rows = q.rows(), cols = q.cols();
  for (std::size_t c = 0; c < cols; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Quaternion coef{};
        for (std::size_t k = 0; k < rows; ++k) coef += q(k, prev).conj() * q(k, c);
        for (std::size_t k = 0; k < rows; ++k) q(k, c) -= q(k, prev) * coef;
      }
    }
    double n = 0;
    for (std::size_t k = 0; k < rows; ++k) n += q(k, c).norm_sq();
    n = std::sqrt(n);
    if (n < 1e-10) throw NotIsometricError("gram_schmidt_orthonormalize: rank-deficient input");
    for (std::size_t k = 0; k < rows; ++k) q(k, c) *= 1.0 / n;
  }
  return q;
}

int rank(const QMatrix& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(complex_adjoint(a));
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(s.size() > 0 ? s[0] : 0.0, 1e-300);
  int count = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cutoff) ++count;
  if (count % 2 != 0) throw OddMultiplicityError("chi rank is odd; tolerance hit a singular-value pair");
  return count / 2;
}

std::pair<QMatrix, QMatrix> spectral_split(const QMatrix& a, double tol) {
  QMatrix pos = herm_apply(a, tol, "spectral_split",
                           [tol](double v) { return v > tol ? v : 0.0; });
  QMatrix neg = herm_apply(a, tol, "spectral_split",
                           [tol](double v) { return v < -tol ? -v : 0.0; });
  return {std::move(pos), std::move(neg)};
}

}  // namespace qschur
