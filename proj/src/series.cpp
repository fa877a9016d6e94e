#include "qschur/series.hpp"

#include <cmath>
#include <sstream>

#include "qschur/parallel.hpp"
#include "qschur/qlinalg.hpp"

namespace qschur {

LSeries conj_series(const LSeries& f) {
  std::vector<Quaternion> c(f.coeffs().size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(static_cast<int>(n)).conj();
  return LSeries(std::move(c));
}

RSeries adjoint_series(const LSeries& f) {
  std::vector<Quaternion> c(f.coeffs().size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(static_cast<int>(n)).conj();
  return RSeries(std::move(c));
}

MatRSeries adjoint_series(const MatSeries& f) {
  std::vector<QMatrix> c(f.coeffs().size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(static_cast<int>(n)).adjoint();
  return MatRSeries(std::move(c));
}

LSeries symmetrize(const LSeries& f) {
  LSeries s = star_mul(conj_series(f), f);
  const double scale = std::max(1.0, s.max_coeff_norm());
  for (int n = 0; n <= s.degree(); ++n) {
    Quaternion& c = s.coeff(n);
    if (c.im_norm() > 1e-12 * scale) {
      std::ostringstream os;
      os << "symmetrize: coefficient " << n << " has imaginary residue " << c.im_norm();
      throw InternalError(os.str());
    }
    c = Quaternion(c.w);
  }
  return s;
}

namespace detail {

std::vector<double> invert_real_series(const std::vector<double>& s) {
  std::vector<double> u(s.size());
  u[0] = 1.0 / s[0];
  for (std::size_t n = 1; n < s.size(); ++n) {
    double acc = 0;
    for (std::size_t r = 1; r <= n; ++r) acc += s[r] * u[n - r];
    u[n] = -acc * u[0];
  }
  return u;
}

}  // namespace detail

LSeries star_inv(const LSeries& f) {
  if (f.coeff(0).norm() < 1e-14) throw NonInvertibleConstantTermError{};
  const LSeries fs = symmetrize(f);
  std::vector<double> s(fs.coeffs().size());
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = fs.coeff(static_cast<int>(n)).w;
  const std::vector<double> u = detail::invert_real_series(s);
  const LSeries fc = conj_series(f);
  std::vector<Quaternion> c(f.coeffs().size());
  for (int k = 0; k <= f.degree(); ++k) {
    Quaternion acc{};
    for (int r = 0; r <= k; ++r) acc += u[static_cast<std::size_t>(r)] * fc.coeff(k - r);
    c[static_cast<std::size_t>(k)] = acc;
  }
  return LSeries(std::move(c));
}

MatSeries star_inv(const MatSeries& f) {
  const QMatrix& a0 = f.coeff(0);
  if (!a0.is_square()) throw ShapeMismatchError("star_inv needs square matrix coefficients");
  QMatrix a0_inv;
  try {
    a0_inv = inverse(a0);
  } catch (const Error&) {
    throw NonInvertibleConstantTermError{};
  }
  std::vector<QMatrix> g(f.coeffs().size(), QMatrix(a0.rows(), a0.cols()));
  g[0] = a0_inv;
  for (int n = 1; n <= f.degree(); ++n) {
    QMatrix acc(a0.rows(), a0.cols());
    for (int r = 1; r <= n; ++r) acc += f.coeff(r) * g[static_cast<std::size_t>(n - r)];
    g[static_cast<std::size_t>(n)] = -(a0_inv * acc);
  }
  return MatSeries(std::move(g));
}

SplitSeries restrict_split(const LSeries& f, const ImagUnit& i_dir, const ImagUnit& j_dir) {
  if (std::abs(i_dir.dot(j_dir)) > 1e-12) throw NotOrthogonalError{};
  const Quaternion e1 = i_dir.q();
  const Quaternion e2 = j_dir.q();
  const Quaternion e3 = e1 * e2;
  SplitSeries out;
  out.f.resize(f.coeffs().size());
  out.g.resize(f.coeffs().size());
  for (int n = 0; n <= f.degree(); ++n) {
    const Quaternion& a = f.coeff(n);
    out.f[static_cast<std::size_t>(n)] = {dot4(a, Quaternion(1)), dot4(a, e1)};
    out.g[static_cast<std::size_t>(n)] = {dot4(a, e2), dot4(a, e3)};
  }
  return out;
}

LSeries assemble_split(const SplitSeries& s, const ImagUnit& i_dir, const ImagUnit& j_dir) {
  const Quaternion e1 = i_dir.q();
  const Quaternion e2 = j_dir.q();
  const Quaternion e3 = e1 * e2;
  std::vector<Quaternion> c(s.f.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = Quaternion(s.f[n].real()) + e1 * s.f[n].imag() + e2 * s.g[n].real() + e3 * s.g[n].imag();
  }
  return LSeries(std::move(c));
}

Quaternion ext_from_slice(const Quaternion& f_z, const Quaternion& f_zbar, const ImagUnit& i_dir,
                          const Quaternion& p) {
  if (p.im_norm() < 1e-14) return f_z;
  const Quaternion ip = decompose(p).dir.q();
  return 0.5 * (f_z + f_zbar) + 0.5 * (ip * i_dir.q() * (f_zbar - f_z));
}

bool is_slice_preserving(const LSeries& f, double tol) {
  for (int n = 0; n <= f.degree(); ++n)
    if (f.coeff(n).im_norm() > tol) return false;
  return true;
}

std::vector<Quaternion> eval_batch(const LSeries& f, std::span<const Quaternion> points) {
  std::vector<Quaternion> out(points.size());
  par::for_index(points.size(), [&](std::size_t k) { out[k] = eval(f, points[k]); });
  return out;
}

std::vector<Quaternion> eval_batch_serial(const LSeries& f, std::span<const Quaternion> points) {
  std::vector<Quaternion> out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) out[k] = eval(f, points[k]);
  return out;
}

MatSeries neumann_series(const QMatrix& a, int degree) {
  if (!a.is_square()) throw ShapeMismatchError("neumann_series needs a square matrix");
  std::vector<QMatrix> c(static_cast<std::size_t>(degree) + 1);
  c[0] = QMatrix::identity(a.rows());
  for (int n = 1; n <= degree; ++n) c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * a;
  return MatSeries(std::move(c));
}

}  // namespace qschur
