#pragma once

#include "qschur/qlinalg.hpp"
#include "qschur/series.hpp"

namespace qschur {

// State-space data (A,B,C,D) with metric matrices (H, J1, J2).  The metric
// identity is accepted in either orientation (J1 inside / J2 outside, or the
// swap); the satisfied one is reported.
struct UnitaryColligation {
  QMatrix a, b, c, d;
  QMatrix h;        // Hermitian invertible
  QMatrix j1, j2;   // signature matrices
};

struct RelationCheck {
  double residual_j1_inside = 0;
  double residual_j2_inside = 0;
  int orientation = 0;  // 1, 2, or 0 when neither holds
};

RelationCheck check_relation(const UnitaryColligation& col, double tol = 1e-10);

// s(p) = D + p C (I - pA)^{-star} B: coefficients D, C A^{k-1} B.
MatSeries eval_schur(const UnitaryColligation& col, int degree = kDefaultDegree);

struct AgReport {
  double residual = 0;
  int orientation = 0;
};

// Coefficient comparison of J_out - s(p) J_in s(q)^* against
// C (I-pA)^{-star} (H - p H qbar) ((I-qA)^{-star})^* C^*.
// Refuses (RelationNotSatisfiedError) when the metric identity fails.
AgReport check_ag_identity(const UnitaryColligation& col, int degree = 40, double tol = 1e-10);

// Rank of the stacked observability matrix [C; CA; ...; CA^{n-1}].
int observability_index(const QMatrix& c, const QMatrix& a);

// Data of phi(p) = (1/2) C (I + pV)(I - pV)^{-star} C^* J + (phi0 - J phi0^* J)/2.
struct CaraColligation {
  QMatrix v;      // co-isometry, V V^* = I
  QMatrix c;      // N x n
  QMatrix j;      // signature
  QMatrix phi0;   // prescribed value at the origin
};

// Coefficients phi_0 = (1/2) C C^* J + (phi0 - J phi0^* J)/2, phi_k = C V^k C^* J.
// Throws NotCoisometryError when |V V^* - I| > tol.
MatSeries eval_cara(const CaraColligation& col, int degree = kDefaultDegree, double tol = 1e-10);

struct CaraKernelReport {
  double residual_plain = 0;       // numerator read as phi(p) J + J phi(q)^*
  double residual_trailing_j = 0;  // numerator read as phi(p) J + J phi(q)^* J
  int matching_variant = 0;        // 1 = plain, 2 = trailing J, 0 = neither
};

// Compares both numerator readings against C V^m V^{*n} C^* - [m,n>=1] C V^{m-1} V^{*(n-1)} C^*.
CaraKernelReport check_cara_kernel(const CaraColligation& col, int degree = 40, double tol = 1e-8);

}  // namespace qschur
