#include "qschur/interp.hpp"

#include <cmath>
#include <sstream>

#include "qschur/kernels.hpp"
#include "qschur/parallel.hpp"
#include "qschur/rng.hpp"

namespace qschur {

namespace {

constexpr double kBallMargin = 1e-6;  // Stein conditioning

void require_inside(double modulus, const std::string& what) {
  if (modulus >= 1.0 - kBallMargin) {
    std::ostringstream os;
    os << what << " has modulus " << modulus << " too close to the boundary";
    throw NodeOutsideBallError(os.str());
  }
}

}  // namespace

void validate(const InterpProblem& prob) {
  const auto& pts = prob.points;
  const auto& sph = prob.spheres;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    require_inside(pts[i].norm(), "point " + std::to_string(i));
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (same_sphere(pts[i], pts[j])) {
        std::ostringstream os;
        os << "points " << i << " and " << j << " lie on the same sphere";
        throw OverlappingSpheresError(os.str());
      }
  }
  for (std::size_t i = 0; i < sph.size(); ++i) {
    require_inside(sph[i].abs(), "sphere " + std::to_string(i));
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (sph[i].contains(pts[j])) {
        std::ostringstream os;
        os << "point " << j << " lies on sphere " << i;
        throw OverlappingSpheresError(os.str());
      }
    for (std::size_t j = i + 1; j < sph.size(); ++j)
      if (std::abs(sph[i].re - sph[j].re) <= 1e-12 &&
          std::abs(sph[i].im_norm - sph[j].im_norm) <= 1e-12) {
        std::ostringstream os;
        os << "spheres " << i << " and " << j << " coincide";
        throw OverlappingSpheresError(os.str());
      }
  }
}

NodeData build_node_data(const InterpProblem& prob) {
  validate(prob);
  std::vector<Quaternion> nodes = prob.points;
  for (const TwoSphere& s : prob.spheres) {
    const Quaternion c = s.representative();
    nodes.push_back(c);
    nodes.push_back(c.conj());
  }
  NodeData nd;
  nd.a = QMatrix::diagonal(nodes);
  nd.c_row = QMatrix::ones(1, nodes.size());
  nd.nodes = std::move(nodes);
  return nd;
}

QMatrix gram_p(const QMatrix& a, const QMatrix& c_row, double tol) {
  const QMatrix p = solve_stein(a, c_row.adjoint() * c_row, tol);
  if (p.rows() == 0) return p;
  try {
    const Spectrum sp = herm_eigen(p);
    if (sp.eigenvalues.empty() || sp.eigenvalues.front() <= 1e-10 * std::max(1.0, p.frobenius_norm()))
      throw NotPDError("node Gram matrix is not positive definite (duplicated nodes?)");
  } catch (const OddMultiplicityError&) {
    throw NotPDError("node Gram matrix spectrum is degenerate");
  }
  return p;
}

Multiplier build_multiplier(const QMatrix& a, const QMatrix& c_row, const QMatrix& p, int degree) {
  const std::size_t n = a.rows();
  Multiplier m;
  if (n == 0) {
    m.b = QMatrix(0, 1);
    m.d = Quaternion(1);
    m.series = LSeries::constant(Quaternion(1), degree);
    m.t = QMatrix(1, 0);
    m.h = QMatrix::scalar(Quaternion(1));
    return m;
  }
  const QMatrix s = sqrt_pd(p);
  const QMatrix s_inv = inv_sqrt_pd(p);
  m.t = vcat(s * a * s_inv, c_row * s_inv);
  m.h = gram_schmidt_complete(m.t);
  const QMatrix bd = block_diag(s_inv, QMatrix::identity(1)) * m.h;
  m.b = bd.block(0, 0, n, 1);
  m.d = bd(n, 0);

  std::vector<Quaternion> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[0] = m.d;
  QMatrix row = c_row;
  for (int k = 1; k <= degree; ++k) {
    coeffs[static_cast<std::size_t>(k)] = (row * m.b)(0, 0);
    row = row * a;
  }
  m.series = LSeries(std::move(coeffs));
  return m;
}

double check_bschurmult(const InterpSolution& sol, int degree) {
  const int deg = std::min(degree, sol.multiplier.degree());
  const std::size_t n = sol.a.rows();
  // Left side: rows c A^m against P^{-1}.
  std::vector<QMatrix> rows(static_cast<std::size_t>(deg) + 1);
  rows[0] = sol.c_row;
  for (int k = 1; k <= deg; ++k) rows[static_cast<std::size_t>(k)] = rows[static_cast<std::size_t>(k - 1)] * sol.a;
  const QMatrix p_inv = (n == 0) ? QMatrix(0, 0) : inv_pd(sol.p);
  const KernelSeries rhs = schur_kernel(sol.multiplier.truncated(deg));
  double mismatch = 0;
  std::vector<double> per_row(static_cast<std::size_t>(deg) + 1, 0.0);
  par::for_index(static_cast<std::size_t>(deg) + 1, [&](std::size_t mi) {
    double local = 0;
    const QMatrix lead = rows[mi] * p_inv;
    for (int nn = 0; nn <= deg; ++nn) {
      const QMatrix lhs = lead * rows[static_cast<std::size_t>(nn)].adjoint();
      local = std::max(local, max_abs_diff(lhs, rhs.coeff(static_cast<int>(mi), nn)));
    }
    per_row[mi] = local;
  });
  for (double v : per_row) mismatch = std::max(mismatch, v);
  return mismatch;
}

InterpSolution solve(const InterpProblem& prob, int degree, std::uint64_t seed) {
  NodeData nd = build_node_data(prob);
  InterpSolution sol;
  sol.problem = prob;
  sol.a = std::move(nd.a);
  sol.c_row = std::move(nd.c_row);
  sol.nodes = std::move(nd.nodes);
  sol.p = gram_p(sol.a, sol.c_row);
  Multiplier m = build_multiplier(sol.a, sol.c_row, sol.p, degree);
  sol.b = std::move(m.b);
  sol.d = m.d;
  sol.multiplier = std::move(m.series);

  InterpDiagnostics& diag = sol.diagnostics;
  const std::size_t n = sol.a.rows();
  diag.stein_residual =
      (n == 0) ? 0.0
               : max_abs_diff(sol.p - sol.a.adjoint() * sol.p * sol.a, sol.c_row.adjoint() * sol.c_row);
  diag.isometry_residual =
      (n == 0) ? 0.0 : max_abs_diff(m.t.adjoint() * m.t, QMatrix::identity(n));
  const QMatrix th = hcat(m.t, m.h);
  diag.unitary_residual = std::max(max_abs_diff(th * th.adjoint(), QMatrix::identity(n + 1)),
                                   max_abs_diff(th.adjoint() * th, QMatrix::identity(n + 1)));

  // Node residuals: the prescribed points, both sphere representatives, and
  // ten random directions per sphere.
  std::vector<Quaternion> samples = sol.nodes;
  Rng rng(seed);
  for (const TwoSphere& s : prob.spheres)
    for (int k = 0; k < 10; ++k) samples.push_back(s.point(rng.imag_unit()));
  double radius = 0;
  for (const Quaternion& q : samples) radius = std::max(radius, q.norm());
  diag.node_tail_bound = tail_bound(sol.multiplier, radius);
  const std::vector<Quaternion> values = eval_batch(sol.multiplier, samples);
  for (const Quaternion& v : values)
    diag.max_node_residual = std::max(diag.max_node_residual, v.norm());
  diag.bschur_residual = check_bschurmult(sol, std::min(degree, 40));
  return sol;
}

std::vector<std::string> residual_breaches(const InterpSolution& sol, double tol) {
  std::vector<std::string> breaches;
  const InterpDiagnostics& d = sol.diagnostics;
  auto check = [&](const char* name, double value, double limit) {
    if (!(value <= limit)) {
      std::ostringstream os;
      os << name << " = " << value << " exceeds " << limit;
      breaches.push_back(os.str());
    }
  };
  check("stein_residual", d.stein_residual, 1e-10);
  check("isometry_residual", d.isometry_residual, 1e-10);
  check("unitary_residual", d.unitary_residual, 1e-10);
  check("max_node_residual", d.max_node_residual, d.node_tail_bound + tol);
  check("bschur_residual", d.bschur_residual, tol);
  return breaches;
}

InterpSolution solve_verified(const InterpProblem& prob, int degree, double tol,
                              std::uint64_t seed) {
  InterpSolution sol = solve(prob, degree, seed);
  const std::vector<std::string> breaches = residual_breaches(sol, tol);
  if (!breaches.empty()) {
    std::ostringstream os;
    os << "interpolation verification failed:";
    for (const std::string& b : breaches) os << " [" << b << "]";
    throw VerificationError(os.str());
  }
  return sol;
}

}  // namespace qschur
