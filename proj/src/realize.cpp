#include "qschur/realize.hpp"

#include <cmath>
#include <sstream>

#include "qschur/parallel.hpp"

namespace qschur {

namespace {

void check_shapes(const UnitaryColligation& col) {
  const std::size_t n = col.a.rows();
  if (!col.a.is_square()) throw ShapeMismatchError("A must be square");
  if (col.b.rows() != n) throw ShapeMismatchError("B rows must match A");
  if (col.c.cols() != n) throw ShapeMismatchError("C columns must match A");
  if (col.d.rows() != col.c.rows() || col.d.cols() != col.b.cols())
    throw ShapeMismatchError("D must be C-rows by B-columns");
  if (col.h.rows() != n || col.h.cols() != n) throw ShapeMismatchError("H must match A");
  if (col.j1.rows() != col.b.cols() || !col.j1.is_square())
    throw ShapeMismatchError("J1 must be square of B-columns size");
  if (col.j2.rows() != col.c.rows() || !col.j2.is_square())
    throw ShapeMismatchError("J2 must be square of C-rows size");
}

QMatrix block_operator(const UnitaryColligation& col) {
  return vcat(hcat(col.a, col.b), hcat(col.c, col.d));
}

}  // namespace

RelationCheck check_relation(const UnitaryColligation& col, double tol) {
  check_shapes(col);
  const QMatrix m = block_operator(col);
  const QMatrix inner1 = block_diag(col.h, col.j1);
  const QMatrix outer1 = block_diag(col.h, col.j2);
  const QMatrix inner2 = block_diag(col.h, col.j2);
  const QMatrix outer2 = block_diag(col.h, col.j1);
  RelationCheck rc;
  rc.residual_j1_inside = max_abs_diff(m * inner1 * m.adjoint(), outer1);
  rc.residual_j2_inside = max_abs_diff(m * inner2 * m.adjoint(), outer2);
  if (rc.residual_j1_inside <= tol)
    rc.orientation = 1;
  else if (rc.residual_j2_inside <= tol)
    rc.orientation = 2;
  return rc;
}

MatSeries eval_schur(const UnitaryColligation& col, int degree) {
  check_shapes(col);
  std::vector<QMatrix> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[0] = col.d;
  QMatrix lead = col.c;  // C A^{k-1}
  for (int k = 1; k <= degree; ++k) {
    coeffs[static_cast<std::size_t>(k)] = lead * col.b;
    lead = lead * col.a;
  }
  return MatSeries(std::move(coeffs));
}

AgReport check_ag_identity(const UnitaryColligation& col, int degree, double tol) {
  const RelationCheck rc = check_relation(col, tol);
  if (rc.orientation == 0) {
    std::ostringstream os;
    os << "metric identity fails in both orientations (residuals " << rc.residual_j1_inside
       << ", " << rc.residual_j2_inside << ")";
    throw RelationNotSatisfiedError(os.str());
  }
  const QMatrix& j_in = rc.orientation == 1 ? col.j1 : col.j2;
  const QMatrix& j_out = rc.orientation == 1 ? col.j2 : col.j1;

  const MatSeries s = eval_schur(col, degree);
  // rows_m = C A^m, then RHS_{mn} = rows_m H rows_n^* - [m,n>=1] rows_{m-1} H rows_{n-1}^*.
  std::vector<QMatrix> rows(static_cast<std::size_t>(degree) + 1);
  rows[0] = col.c;
  for (int m = 1; m <= degree; ++m) rows[static_cast<std::size_t>(m)] = rows[static_cast<std::size_t>(m - 1)] * col.a;
  std::vector<QMatrix> rows_h(rows.size());
  for (std::size_t m = 0; m < rows.size(); ++m) rows_h[m] = rows[m] * col.h;

  std::vector<double> per_row(static_cast<std::size_t>(degree) + 1, 0.0);
  par::for_index(static_cast<std::size_t>(degree) + 1, [&](std::size_t mi) {
    const int m = static_cast<int>(mi);
    double local = 0;
    for (int n = 0; n <= degree; ++n) {
      QMatrix rhs = rows_h[mi] * rows[static_cast<std::size_t>(n)].adjoint();
      if (m >= 1 && n >= 1)
        rhs -= rows_h[static_cast<std::size_t>(m - 1)] * rows[static_cast<std::size_t>(n - 1)].adjoint();
      QMatrix lhs = -(s.coeff(m) * j_in * s.coeff(n).adjoint());
      if (m == 0 && n == 0) lhs += j_out;
      local = std::max(local, max_abs_diff(lhs, rhs));
    }
    per_row[mi] = local;
  });
  AgReport report;
  report.orientation = rc.orientation;
  for (double v : per_row) report.residual = std::max(report.residual, v);
  return report;
}

int observability_index(const QMatrix& c, const QMatrix& a) {
  if (!a.is_square() || c.cols() != a.rows())
    throw ShapeMismatchError("observability_index: C columns must match A");
  const std::size_t n = a.rows();
  if (n == 0) return 0;
  QMatrix stacked = c;
  QMatrix lead = c;
  for (std::size_t k = 1; k < n; ++k) {
    lead = lead * a;
    stacked = vcat(stacked, lead);
  }
  return rank(stacked);
}

MatSeries eval_cara(const CaraColligation& col, int degree, double tol) {
  if (!col.v.is_square()) throw ShapeMismatchError("V must be square");
  if (col.c.cols() != col.v.rows()) throw ShapeMismatchError("C columns must match V");
  const std::size_t n_dim = col.c.rows();
  if (col.j.rows() != n_dim || col.phi0.rows() != n_dim || col.phi0.cols() != n_dim)
    throw ShapeMismatchError("J and phi0 must be square of C-rows size");
  if (!col.j.is_signature(1e-10)) throw NotSignatureError("J is not a signature matrix");
  const std::size_t n = col.v.rows();
  const double coiso = max_abs_diff(col.v * col.v.adjoint(), QMatrix::identity(n));
  if (coiso > tol) {
    std::ostringstream os;
    os << "V V* deviates from the identity by " << coiso;
    throw NotCoisometryError(os.str());
  }
  const QMatrix cc_j = col.c * col.c.adjoint() * col.j;
  std::vector<QMatrix> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[0] = 0.5 * cc_j + 0.5 * (col.phi0 - col.j * col.phi0.adjoint() * col.j);
  QMatrix lead = col.c;  // C V^{k-1}
  for (int k = 1; k <= degree; ++k) {
    lead = lead * col.v;
    coeffs[static_cast<std::size_t>(k)] = lead * col.c.adjoint() * col.j;
  }
  // The J-symmetric part of the constant coefficient is pinned by C C^* J.
  const QMatrix sym = coeffs[0] + col.j * coeffs[0].adjoint() * col.j;
  if (max_abs_diff(sym, cc_j) > 1e-10 * std::max(1.0, cc_j.max_abs()))
    throw InternalError("eval_cara: constant coefficient lost its J-symmetric part");
  return MatSeries(std::move(coeffs));
}

CaraKernelReport check_cara_kernel(const CaraColligation& col, int degree, double tol) {
  const MatSeries phi = eval_cara(col, degree);
  std::vector<QMatrix> rows(static_cast<std::size_t>(degree) + 1);
  rows[0] = col.c;
  for (int m = 1; m <= degree; ++m) rows[static_cast<std::size_t>(m)] = rows[static_cast<std::size_t>(m - 1)] * col.v;

  std::vector<double> plain(static_cast<std::size_t>(degree) + 1, 0.0);
  std::vector<double> trailing(static_cast<std::size_t>(degree) + 1, 0.0);
  par::for_index(static_cast<std::size_t>(degree) + 1, [&](std::size_t mi) {
    const int m = static_cast<int>(mi);
    double local_plain = 0, local_trailing = 0;
    for (int n = 0; n <= degree; ++n) {
      QMatrix rhs = rows[mi] * rows[static_cast<std::size_t>(n)].adjoint();
      if (m >= 1 && n >= 1)
        rhs -= rows[static_cast<std::size_t>(m - 1)] * rows[static_cast<std::size_t>(n - 1)].adjoint();
      QMatrix lhs_common(col.c.rows(), col.c.rows());
      if (n == 0) lhs_common += phi.coeff(m) * col.j;
      QMatrix lhs_plain = lhs_common;
      QMatrix lhs_trailing = lhs_common;
      if (m == 0) {
        const QMatrix jp = col.j * phi.coeff(n).adjoint();
        lhs_plain += jp;
        lhs_trailing += jp * col.j;
      }
      local_plain = std::max(local_plain, max_abs_diff(lhs_plain, rhs));
      local_trailing = std::max(local_trailing, max_abs_diff(lhs_trailing, rhs));
    }
    plain[mi] = local_plain;
    trailing[mi] = local_trailing;
  });
  CaraKernelReport report;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    report.residual_plain = std::max(report.residual_plain, plain[i]);
    report.residual_trailing_j = std::max(report.residual_trailing_j, trailing[i]);
  }
  if (report.residual_plain <= tol)
    report.matching_variant = 1;
  else if (report.residual_trailing_j <= tol)
    report.matching_variant = 2;
  return report;
}

}  // namespace qschur
