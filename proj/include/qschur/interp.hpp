#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qschur/qlinalg.hpp"
#include "qschur/series.hpp"

namespace qschur {

// Vanishing-interpolation data: points and whole spheres inside the ball,
// with pairwise disjoint spheres.
struct InterpProblem {
  std::vector<Quaternion> points;
  std::vector<TwoSphere> spheres;
};

// Throws OverlappingSpheresError / NodeOutsideBallError.
void validate(const InterpProblem& prob);

struct NodeData {
  QMatrix a;                       // diag(a_1..a_N, c_1, c_1bar, ..., c_M, c_Mbar)
  QMatrix c_row;                   // all-ones row
  std::vector<Quaternion> nodes;   // the diagonal, in order
};

NodeData build_node_data(const InterpProblem& prob);

// Gram matrix of the node kernel columns, defined as the Stein solution
// P = sum A*^n c^*c A^n; asserted Hermitian positive definite.
QMatrix gram_p(const QMatrix& a, const QMatrix& c_row, double tol = 1e-13);

struct Multiplier {
  QMatrix b;      // column
  Quaternion d;
  LSeries series; // d + sum p^{n+1} c A^n b
  QMatrix t;      // [P^{1/2} A P^{-1/2}; c P^{-1/2}]
  QMatrix h;      // completion column
};

Multiplier build_multiplier(const QMatrix& a, const QMatrix& c_row, const QMatrix& p, int degree);

struct InterpDiagnostics {
  double stein_residual = 0;
  double isometry_residual = 0;    // |T*T - I|
  double unitary_residual = 0;     // |[T h][T h]* - I|
  double max_node_residual = 0;    // |B| at points and sphere samples
  double node_tail_bound = 0;
  double bschur_residual = 0;      // kernel-identity mismatch up to degree 40
};

struct InterpSolution {
  InterpProblem problem;
  QMatrix a;
  QMatrix c_row;
  std::vector<Quaternion> nodes;
  QMatrix p;
  QMatrix b;
  Quaternion d;
  LSeries multiplier;
  InterpDiagnostics diagnostics;
};

// Full pipeline; diagnostics are always filled, never enforced here.
InterpSolution solve(const InterpProblem& prob, int degree = kDefaultDegree,
                     std::uint64_t seed = 0);

// Names of the residuals exceeding their thresholds (structure residuals at
// 1e-10, evaluation residuals at tol plus the truncation bound).
std::vector<std::string> residual_breaches(const InterpSolution& sol, double tol = 1e-8);

// solve + throw VerificationError when any residual is out of spec.
InterpSolution solve_verified(const InterpProblem& prob, int degree = kDefaultDegree,
                              double tol = 1e-8, std::uint64_t seed = 0);

// Max coefficient mismatch, up to the given degree, between the node-data
// kernel c A^m P^{-1} A*^n c^* and the Schur kernel of the multiplier.
double check_bschurmult(const InterpSolution& sol, int degree = 40);

}  // namespace qschur
