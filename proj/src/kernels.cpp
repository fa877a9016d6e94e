#include "qschur/kernels.hpp"

#include <cmath>
#include <sstream>

#include "qschur/parallel.hpp"
#include "qschur/rng.hpp"

namespace qschur {

KernelSeries::KernelSeries(int degree, std::size_t dim)
    : degree_(degree),
      dim_(dim),
      k_(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1),
         QMatrix(dim, dim)) {}

KernelSeries KernelSeries::from_grid(int degree, std::size_t dim, std::vector<QMatrix> grid,
                                     double herm_tol) {
  KernelSeries k(degree, dim);
  const std::size_t want = static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1);
  if (grid.size() != want) throw ShapeMismatchError("kernel grid size");
  k.k_ = std::move(grid);
  double scale = std::max(1.0, k.max_coeff_norm());
  for (int m = 0; m <= degree; ++m)
    for (int n = m; n <= degree; ++n) {
      if (max_abs_diff(k.coeff(m, n), k.coeff(n, m).adjoint()) > herm_tol * scale) {
        std::ostringstream os;
        os << "kernel coefficient (" << m << "," << n << ") breaks Hermitian symmetry";
        throw NotHermitianError(os.str());
      }
    }
  return k;
}

double KernelSeries::max_coeff_norm() const {
  double m = 0;
  for (const QMatrix& e : k_) m = std::max(m, e.max_abs());
  return m;
}

QMatrix KernelSeries::evaluate(const Quaternion& z, const Quaternion& w) const {
  const Quaternion wbar = w.conj();
  QMatrix acc(dim_, dim_);
  for (int m = degree_; m >= 0; --m) {
    QMatrix row = coeff(m, degree_);
    for (int n = degree_ - 1; n >= 0; --n) row = coeff(m, n) + row * wbar;
    acc = row + z * acc;
  }
  return acc;
}

double KernelSeries::tail_bound(double r) const {
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double m = max_coeff_norm();
  // Everything outside the (degree+1)^2 grid: two half-strips.
  return 2.0 * m * std::pow(r, degree_ + 1) / ((1.0 - r) * (1.0 - r));
}

Quaternion hardy_kernel(const Quaternion& p, const Quaternion& q) {
  const Quaternion den_l = Quaternion(1) - 2.0 * q.re() * p + q.norm_sq() * (p * p);
  const Quaternion den_r = Quaternion(1) - 2.0 * p.re() * q.conj() + p.norm_sq() * (q.conj() * q.conj());
  if (den_l.norm() < 1e-14 || den_r.norm() < 1e-14) throw PoleSphereError{};
  const Quaternion left = den_l.inverse() * (Quaternion(1) - p * q);
  const Quaternion right = (Quaternion(1) - p.conj() * q.conj()) * den_r.inverse();
  if ((left - right).norm() > 1e-12 * std::max(1.0, left.norm()))
    throw InternalError("hardy_kernel: the two closed forms disagree");
  return left;
}

KernelSeries hardy_kernel_series(int degree, std::size_t dim, double scale) {
  KernelSeries k(degree, dim);
  for (int m = 0; m <= degree; ++m) k.coeff(m, m) = scale * QMatrix::identity(dim);
  return k;
}

namespace {

void require_signature(const QMatrix& j, const char* name) {
  if (!j.is_signature(1e-10)) {
    std::ostringstream os;
    os << name << " is not a signature matrix";
    throw NotSignatureError(os.str());
  }
}

// K_{mn} = sum_l G_{m-l, n-l}: prefix sums along the grid diagonals.
KernelSeries accumulate_shift(int degree, std::size_t dim, std::vector<QMatrix> g) {
  const auto stride = static_cast<std::size_t>(degree + 1);
  for (int m = 1; m <= degree; ++m)
    for (int n = 1; n <= degree; ++n)
      g[static_cast<std::size_t>(m) * stride + static_cast<std::size_t>(n)] +=
          g[static_cast<std::size_t>(m - 1) * stride + static_cast<std::size_t>(n - 1)];
  return KernelSeries::from_grid(degree, dim, std::move(g));
}

std::vector<QMatrix> schur_numerator_grid(const MatSeries& theta, const QMatrix& j1,
                                          const QMatrix& j2, bool parallel) {
  const int degree = theta.degree();
  const std::size_t rows = theta.coeff(0).rows();
  const std::size_t cols = theta.coeff(0).cols();
  if (j1.rows() != cols || j2.rows() != rows)
    throw ShapeMismatchError("schur_kernel: J1 must match Theta's columns, J2 its rows");
  const auto stride = static_cast<std::size_t>(degree + 1);
  std::vector<QMatrix> g(stride * stride);
  std::vector<QMatrix> tj(stride);  // Theta_a J1
  for (int a = 0; a <= degree; ++a) tj[static_cast<std::size_t>(a)] = theta.coeff(a) * j1;
  auto cell = [&](std::size_t idx) {
    const int a = static_cast<int>(idx / stride);
    const int b = static_cast<int>(idx % stride);
    QMatrix v = -(tj[static_cast<std::size_t>(a)] * theta.coeff(b).adjoint());
    if (a == 0 && b == 0) v += j2;
    g[idx] = std::move(v);
  };
  if (parallel) {
    par::for_index(stride * stride, cell);
  } else {
    for (std::size_t idx = 0; idx < stride * stride; ++idx) cell(idx);
  }
  return g;
}

}  // namespace

KernelSeries schur_kernel(const MatSeries& theta, const QMatrix& j1, const QMatrix& j2) {
  require_signature(j1, "J1");
  require_signature(j2, "J2");
  return accumulate_shift(theta.degree(), theta.coeff(0).rows(),
                          schur_numerator_grid(theta, j1, j2, true));
}

KernelSeries schur_kernel_serial(const MatSeries& theta, const QMatrix& j1, const QMatrix& j2) {
  require_signature(j1, "J1");
  require_signature(j2, "J2");
  return accumulate_shift(theta.degree(), theta.coeff(0).rows(),
                          schur_numerator_grid(theta, j1, j2, false));
}

KernelSeries schur_kernel(const LSeries& theta) {
  std::vector<QMatrix> c(theta.coeffs().size());
  for (int n = 0; n <= theta.degree(); ++n)
    c[static_cast<std::size_t>(n)] = QMatrix::scalar(theta.coeff(n));
  return schur_kernel(MatSeries(std::move(c)), QMatrix::identity(1), QMatrix::identity(1));
}

KernelSeries cara_kernel(const MatSeries& phi, const QMatrix& j) {
  require_signature(j, "J");
  const int degree = phi.degree();
  const std::size_t dim = phi.coeff(0).rows();
  if (phi.coeff(0).cols() != dim || j.rows() != dim)
    throw ShapeMismatchError("cara_kernel: phi and J must be square of one size");
  const auto stride = static_cast<std::size_t>(degree + 1);
  std::vector<QMatrix> g(stride * stride, QMatrix(dim, dim));
  par::for_index(stride, [&](std::size_t a) {
    g[a * stride] += phi.coeff(static_cast<int>(a)) * j;            // (a, 0)
    g[a] += j * phi.coeff(static_cast<int>(a)).adjoint();           // (0, a)
  });
  return accumulate_shift(degree, dim, std::move(g));
}

namespace {

GramSample gram_sample_impl(const KernelSeries& k, std::vector<Quaternion> points,
                            std::vector<QMatrix> vectors, double max_tail, bool parallel) {
  if (points.size() != vectors.size())
    throw ShapeMismatchError("gram_sample: one vector per point");
  double radius = 0;
  for (const Quaternion& p : points) radius = std::max(radius, p.norm());
  const double tail = k.tail_bound(radius);
  if (tail > max_tail) {
    std::ostringstream os;
    os << "gram_sample: truncation bound " << tail << " at radius " << radius << " exceeds "
       << max_tail;
    throw RadiusTooLargeError(os.str());
  }
  for (const QMatrix& c : vectors)
    if (c.rows() != k.dim() || c.cols() != 1)
      throw ShapeMismatchError("gram_sample: vectors must be dim x 1 columns");

  const std::size_t n = points.size();
  QMatrix gram(n, n);
  auto entry = [&](std::size_t idx) {
    const std::size_t l = idx / n, j = idx % n;
    if (j < l) return;  // lower triangle filled by symmetry afterwards
    const QMatrix value = vectors[l].adjoint() * k.evaluate(points[l], points[j]) * vectors[j];
    gram(l, j) = value(0, 0);
  };
  if (parallel) {
    par::for_index(n * n, entry);
  } else {
    for (std::size_t idx = 0; idx < n * n; ++idx) entry(idx);
  }
  for (std::size_t l = 0; l < n; ++l) {
    gram(l, l) = Quaternion(gram(l, l).re());  // diagonal of a Hermitian form is real
    for (std::size_t j = 0; j < l; ++j) gram(l, j) = gram(j, l).conj();
  }
  return {std::move(points), std::move(vectors), std::move(gram), tail};
}

}  // namespace

GramSample gram_sample(const KernelSeries& k, std::vector<Quaternion> points,
                       std::vector<QMatrix> vectors, double max_tail) {
  return gram_sample_impl(k, std::move(points), std::move(vectors), max_tail, true);
}

GramSample gram_sample_serial(const KernelSeries& k, std::vector<Quaternion> points,
                              std::vector<QMatrix> vectors, double max_tail) {
  return gram_sample_impl(k, std::move(points), std::move(vectors), max_tail, false);
}

NegSquaresReport kernel_neg_squares(const KernelSeries& k, int trials, std::uint64_t seed,
                                    int sample_size, double radius) {
  Rng rng(seed);
  NegSquaresReport report;
  for (int t = 0; t < trials; ++t) {
    std::vector<Quaternion> points(static_cast<std::size_t>(sample_size));
    std::vector<QMatrix> vectors(static_cast<std::size_t>(sample_size));
    for (auto& p : points) p = rng.in_ball(radius);
    for (auto& c : vectors) {
      QMatrix v(k.dim(), 1);
      double norm_sq = 0;
      do {
        for (std::size_t r = 0; r < k.dim(); ++r) {
          v(r, 0) = Quaternion(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
          norm_sq += v(r, 0).norm_sq();
        }
      } while (norm_sq < 1e-12);
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (std::size_t r = 0; r < k.dim(); ++r) v(r, 0) *= inv;
      c = std::move(v);
    }
    GramSample sample = gram_sample(k, std::move(points), std::move(vectors));
    const double count_tol =
        std::max(1e-8, 10.0 * sample.tail_bound * static_cast<double>(sample_size));
    const int count = neg_squares(sample.gram, count_tol);
    if (count > report.count || report.witness_trial < 0) {
      report.count = count;
      report.witness_trial = t;
      report.stable_trials = 1;
      report.witness = std::move(sample);
    } else if (count == report.count) {
      ++report.stable_trials;
    }
  }
  return report;
}

MatSeries mult_adjoint_apply(const MatSeries& phi, const KernelSeries& k1, const Quaternion& q,
                             const QMatrix& d) {
  const std::size_t m_dim = k1.dim();
  const std::size_t n_rows = phi.coeff(0).rows();
  if (phi.coeff(0).cols() != m_dim)
    throw ShapeMismatchError("mult_adjoint_apply: phi columns must match the kernel dimension");
  if (d.rows() != n_rows || d.cols() != 1)
    throw ShapeMismatchError("mult_adjoint_apply: d must be a column matching phi's rows");
  const int degree = std::min(phi.degree(), k1.degree());
  const Quaternion qbar = q.conj();
  std::vector<QMatrix> out(static_cast<std::size_t>(degree) + 1);
  std::vector<QMatrix> phi_star(static_cast<std::size_t>(degree) + 1);
  for (int s = 0; s <= degree; ++s) phi_star[static_cast<std::size_t>(s)] = phi.coeff(s).adjoint();
  par::for_index(static_cast<std::size_t>(degree) + 1, [&](std::size_t mi) {
    const int m = static_cast<int>(mi);
    // r_n = sum_s K1_{m, n-s} phi_s^*, then Horner in qbar, then apply to d.
    QMatrix acc(m_dim, n_rows);
    for (int n = degree; n >= 0; --n) {
      QMatrix r_n(m_dim, n_rows);
      for (int s = 0; s <= n; ++s) r_n += k1.coeff(m, n - s) * phi_star[static_cast<std::size_t>(s)];
      acc = (n == degree) ? r_n : QMatrix(r_n + acc * qbar);
    }
    out[mi] = acc * d;
  });
  return MatSeries(std::move(out));
}

KernelSeries contraction_defect_kernel(const MatSeries& phi, const KernelSeries& k1,
                                       const KernelSeries& k2, double bound) {
  const std::size_t n_dim = phi.coeff(0).rows();
  const std::size_t m_dim = phi.coeff(0).cols();
  if (k1.dim() != m_dim || k2.dim() != n_dim)
    throw ShapeMismatchError("contraction_defect_kernel: kernel dimensions must match phi");
  const int degree = std::min({phi.degree(), k1.degree(), k2.degree()});
  const auto stride = static_cast<std::size_t>(degree + 1);
  // u_{mn} = sum_r phi_r K1_{m-r, n}
  std::vector<QMatrix> u(stride * stride, QMatrix(n_dim, m_dim));
  par::for_index(stride * stride, [&](std::size_t idx) {
    const int m = static_cast<int>(idx / stride);
    const int n = static_cast<int>(idx % stride);
    QMatrix acc(n_dim, m_dim);
    for (int r = 0; r <= m; ++r) acc += phi.coeff(r) * k1.coeff(m - r, n);
    u[idx] = std::move(acc);
  });
  const double inv_b2 = 1.0 / (bound * bound);
  std::vector<QMatrix> grid(stride * stride, QMatrix(n_dim, n_dim));
  par::for_index(stride * stride, [&](std::size_t idx) {
    const int m = static_cast<int>(idx / stride);
    const int n = static_cast<int>(idx % stride);
    QMatrix acc(n_dim, n_dim);
    for (int s = 0; s <= n; ++s)
      acc += u[static_cast<std::size_t>(m) * stride + static_cast<std::size_t>(n - s)] *
             phi.coeff(s).adjoint();
    grid[idx] = k2.coeff(m, n) - inv_b2 * acc;
  });
  return KernelSeries::from_grid(degree, n_dim, std::move(grid));
}

}  // namespace qschur
