#pragma once

#include <doctest.h>

#include "qschur/qlinalg.hpp"
#include "qschur/qmatrix.hpp"
#include "qschur/rng.hpp"

namespace qschur::test {

inline void check_close(const Quaternion& a, const Quaternion& b, double tol,
                        const char* what = "") {
  INFO(what << ": " << a << " vs " << b);
  CHECK((a - b).norm() <= tol);
}

inline void check_close(double a, double b, double tol) { CHECK(std::abs(a - b) <= tol); }

inline QMatrix random_qmatrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
  QMatrix m(rows, cols);
  for (auto& e : m.entries()) e = rng.quaternion_box() * scale;
  return m;
}

inline QMatrix random_hermitian(Rng& rng, std::size_t n, double scale = 1.0) {
  const QMatrix a = random_qmatrix(rng, n, n, scale);
  return QMatrix(0.5 * (a + a.adjoint()));
}

inline QMatrix random_unitary(Rng& rng, std::size_t n) {
  for (;;) {
    try {
      return gram_schmidt_orthonormalize(random_qmatrix(rng, n, n));
    } catch (const NotIsometricError&) {
      // essentially impossible; draw again
    }
  }
}

}  // namespace qschur::test
