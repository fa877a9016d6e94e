#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qschur/qmatrix.hpp"

namespace qschur {

// Eigenvalues of a Hermitian quaternionic matrix, ascending, with the halved
// multiplicities of the complex-adjoint spectrum.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<int> multiplicities;

  int dim() const {
    int n = 0;
    for (int m : multiplicities) n += m;
    return n;
  }
};

// chi(A): writing A = A1 + A2 j with complex blocks, returns
// [[A1, A2], [-conj(A2), conj(A1)]].  A *-algebra homomorphism.
Eigen::MatrixXcd complex_adjoint(const QMatrix& a);

// Inverse of chi on chi-structured matrices; averages the redundant blocks.
QMatrix from_complex_adjoint(const Eigen::MatrixXcd& m);

// Spectrum of a Hermitian matrix through the complex adjoint.  The complex
// eigenvalues must pair up within 1e-8*|A|; an unpaired value raises
// OddMultiplicityError.  Throws NotHermitianError when |A - A*| > tol*|A|.
Spectrum herm_eigen(const QMatrix& a, double tol = 1e-8);

// Number of eigenvalues < -tol, counted with halved multiplicity.
int neg_squares(const QMatrix& a, double tol = 1e-8);

// Strictly positive square root of a Hermitian positive definite matrix.
// Throws NotPositiveError when an eigenvalue is <= tol.
QMatrix sqrt_pd(const QMatrix& a, double tol = 1e-12);
QMatrix inv_sqrt_pd(const QMatrix& a, double tol = 1e-12);
QMatrix inv_pd(const QMatrix& a, double tol = 1e-12);

// General inverse through an LU factorization of chi(A).
QMatrix inverse(const QMatrix& a);

// P = sum_n A*^n Q A^n, summed until the term norm is below tol*(1-rho), with
// rho estimated from the decay of the terms.  Requires spectral radius < 1 and
// Hermitian Q; gives up with NotConvergentError after 1000 terms.
QMatrix solve_stein(const QMatrix& a, const QMatrix& q, double tol = 1e-12);

// Given an isometric (n+1) x n matrix T (T*T = I in the right-quaternionic
// inner product <u,v> = v*u), returns the unit column h with T*h = 0, so that
// [T h] is unitary.  h is normalized so its last nonzero entry is real and
// positive.  Throws NotIsometricError when |T*T - I| > 1e-8.
QMatrix gram_schmidt_complete(const QMatrix& t);

// Gram-Schmidt Q factor of a full-column-rank matrix (right-quaternionic).
QMatrix gram_schmidt_orthonormalize(const QMatrix& a);

// Quaternionic rank via the singular values of chi(A).
int rank(const QMatrix& a, double tol = 1e-10);

// Spectral split of a Hermitian matrix: A = pos - neg with pos, neg PSD and
// rank(neg) equal to the number of strictly negative eigenvalues.
std::pair<QMatrix, QMatrix> spectral_split(const QMatrix& a, double tol = 1e-10);

}  // namespace qschur
