#include <doctest.h>

#include "helpers.hpp"
#include "qschur/qlinalg.hpp"

using namespace qschur;
using test::random_hermitian;
using test::random_qmatrix;
using test::random_unitary;

TEST_SUITE_BEGIN("qlinalg");

TEST_CASE("complex adjoint of simple matrices") {
  QMatrix jm(1, 1);
  jm(0, 0) = Quaternion::j();
  const Eigen::MatrixXcd chi = complex_adjoint(jm);
  CHECK(chi(0, 0) == std::complex<double>(0, 0));
  CHECK(chi(0, 1) == std::complex<double>(1, 0));
  CHECK(chi(1, 0) == std::complex<double>(-1, 0));
  CHECK(chi(1, 1) == std::complex<double>(0, 0));

  const Eigen::MatrixXcd chi_id = complex_adjoint(QMatrix::identity(3));
  CHECK((chi_id - Eigen::MatrixXcd::Identity(6, 6)).norm() == 0.0);
}

TEST_CASE("complex adjoint is a *-homomorphism") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const QMatrix a = random_qmatrix(rng, 2, 2);
    const QMatrix b = random_qmatrix(rng, 2, 2);
    CHECK((complex_adjoint(a * b) - complex_adjoint(a) * complex_adjoint(b)).norm() <= 1e-12);
    CHECK((complex_adjoint(a + b) - (complex_adjoint(a) + complex_adjoint(b))).norm() == 0.0);
    CHECK((complex_adjoint(a.adjoint()) - complex_adjoint(a).adjoint()).norm() == 0.0);
    CHECK(max_abs_diff(from_complex_adjoint(complex_adjoint(a)), a) == 0.0);
  }
}

TEST_CASE("herm_eigen on frozen examples") {
  {
    const Quaternion d[] = {Quaternion(1), Quaternion(-1)};
    const Spectrum sp = herm_eigen(QMatrix::diagonal(d));
    REQUIRE(sp.eigenvalues.size() == 2);
    CHECK(std::abs(sp.eigenvalues[0] + 1) <= 1e-12);
    CHECK(std::abs(sp.eigenvalues[1] - 1) <= 1e-12);
    CHECK(sp.multiplicities == std::vector<int>{1, 1});
  }
  {
    // [[0, j], [-j, 0]] squares to the identity and has zero trace, so the
    // spectrum is {1, -1}.
    QMatrix m(2, 2);
    m(0, 1) = Quaternion::j();
    m(1, 0) = -Quaternion::j();
    const Spectrum sp = herm_eigen(m);
    REQUIRE(sp.eigenvalues.size() == 2);
    CHECK(std::abs(sp.eigenvalues[0] + 1) <= 1e-12);
    CHECK(std::abs(sp.eigenvalues[1] - 1) <= 1e-12);
  }
  {
    const Spectrum sp = herm_eigen(QMatrix(4, 4));
    REQUIRE(sp.eigenvalues.size() == 1);
    CHECK(sp.eigenvalues[0] == 0.0);
    CHECK(sp.multiplicities[0] == 4);
  }
  QMatrix nh(2, 2);
  nh(0, 1) = Quaternion(1);
  CHECK_THROWS_AS(herm_eigen(nh), NotHermitianError);
}

TEST_CASE("neg_squares") {
  const Quaternion d1[] = {Quaternion(1), Quaternion(-1)};
  CHECK(neg_squares(QMatrix::diagonal(d1)) == 1);
  const Quaternion d2[] = {Quaternion(-1), Quaternion(-1), Quaternion(1)};
  CHECK(neg_squares(QMatrix::diagonal(d2)) == 2);

  Rng rng(22);
  const QMatrix g = random_qmatrix(rng, 3, 4);
  CHECK(neg_squares(g * g.adjoint()) == 0);  // Gram matrices are PSD
}

TEST_CASE("neg_squares is invariant under unitary congruence") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_hermitian(rng, 3);
    const QMatrix u = random_unitary(rng, 3);
    CHECK(neg_squares(u.adjoint() * a * u) == neg_squares(a));
  }
}

TEST_CASE("sqrt_pd") {
  {
    const Quaternion d[] = {Quaternion(4), Quaternion(9)};
    const QMatrix s = sqrt_pd(QMatrix::diagonal(d));
    const Quaternion want[] = {Quaternion(2), Quaternion(3)};
    CHECK(max_abs_diff(s, QMatrix::diagonal(want)) <= 1e-12);
  }
  CHECK(max_abs_diff(sqrt_pd(QMatrix::identity(3)), QMatrix::identity(3)) <= 1e-14);
  {
    const QMatrix s = sqrt_pd(QMatrix::scalar(Quaternion(4.0 / 3.0)));
    CHECK(std::abs(s(0, 0).w - 2.0 / std::sqrt(3.0)) <= 1e-14);
  }
  const Quaternion neg[] = {Quaternion(1), Quaternion(-2)};
  CHECK_THROWS_AS(sqrt_pd(QMatrix::diagonal(neg)), NotPositiveError);
}

TEST_CASE("sqrt_pd squares back and commutes") {
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const QMatrix g = random_qmatrix(rng, 3, 3);
    const QMatrix a = g * g.adjoint() + 0.1 * QMatrix::identity(3);
    const QMatrix s = sqrt_pd(a);
    CHECK(max_abs_diff(s * s, a) <= 1e-10 * std::max(1.0, a.frobenius_norm()));
    CHECK(max_abs_diff(s * a, a * s) <= 1e-10 * a.frobenius_norm() * s.frobenius_norm());
    CHECK(s.is_hermitian(1e-12 * std::max(1.0, s.frobenius_norm())));
  }
}

TEST_CASE("solve_stein") {
  {
    const QMatrix p = solve_stein(QMatrix::scalar(Quaternion(0.5)), QMatrix::scalar(Quaternion(1)));
    CHECK(std::abs(p(0, 0).w - 4.0 / 3.0) <= 1e-12);
  }
  {
    const QMatrix q = QMatrix::ones(2, 2);
    const QMatrix p = solve_stein(QMatrix(2, 2), q);
    CHECK(max_abs_diff(p, q) == 0.0);
  }
  {
    const Quaternion d[] = {Quaternion::i() * 0.5, Quaternion::j() * 0.5};
    const QMatrix a = QMatrix::diagonal(d);
    const QMatrix q = QMatrix::ones(2, 2);
    const QMatrix p = solve_stein(a, q);
    CHECK(max_abs_diff(p - a.adjoint() * p * a, q) <= 1e-10);
    CHECK(p.is_hermitian(1e-12 * p.frobenius_norm()));
  }
  // Spectral radius 1 never meets the bound.
  CHECK_THROWS_AS(solve_stein(QMatrix::identity(1), QMatrix::identity(1)), NotConvergentError);
}

TEST_CASE("solve_stein is PD for distinct nodes") {
  Rng rng(25);
  for (int t = 0; t < 10; ++t) {
    std::vector<Quaternion> nodes;
    for (int k = 0; k < 4; ++k) nodes.push_back(rng.in_ball(0.8));
    const QMatrix a = QMatrix::diagonal(nodes);
    const QMatrix c = QMatrix::ones(1, 4);
    const QMatrix p = solve_stein(a, c.adjoint() * c);
    const Spectrum sp = herm_eigen(p);
    CHECK(sp.eigenvalues.front() > 0.0);
  }
}

TEST_CASE("gram_schmidt_complete") {
  {
    QMatrix t(2, 1);
    t(0, 0) = Quaternion(1);
    const QMatrix h = gram_schmidt_complete(t);
    CHECK(max_abs_diff(h, QMatrix(2, 1, {Quaternion(0), Quaternion(1)})) <= 1e-15);
  }
  {
    const double r = 1.0 / std::sqrt(2.0);
    QMatrix t(2, 1);
    t(0, 0) = Quaternion(r);
    t(1, 0) = Quaternion::i() * r;
    const QMatrix h = gram_schmidt_complete(t);
    CHECK((h.adjoint() * t).max_abs() <= 1e-14);
    CHECK(std::abs(h.frobenius_norm() - 1.0) <= 1e-14);
    // Phase rule: last entry real positive.
    CHECK(h(1, 0).im_norm() <= 1e-14);
    CHECK(h(1, 0).w > 0);
  }
  {
    QMatrix bad(3, 2);
    bad(0, 0) = Quaternion(1);
    bad(0, 1) = Quaternion(1);
    CHECK_THROWS_AS(gram_schmidt_complete(bad), NotIsometricError);
  }
}

TEST_CASE("gram_schmidt_complete makes [T h] unitary on random isometries") {
  Rng rng(26);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
    const QMatrix q = gram_schmidt_orthonormalize(random_qmatrix(rng, n + 1, n));
    const QMatrix h = gram_schmidt_complete(q);
    const QMatrix th = hcat(q, h);
    CHECK(max_abs_diff(th.adjoint() * th, QMatrix::identity(n + 1)) <= 1e-10);
    CHECK(max_abs_diff(th * th.adjoint(), QMatrix::identity(n + 1)) <= 1e-10);
  }
}

TEST_CASE("rank through the complex adjoint") {
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(QMatrix(2, 2)) == 0);
  QMatrix m(2, 2);
  m(0, 0) = Quaternion(1);
  m(0, 1) = Quaternion::i();
  m(1, 0) = Quaternion::j();
  m(1, 1) = Quaternion::j() * Quaternion::i();  // second row = j * first row
  CHECK(rank(m) == 1);
}

TEST_CASE("spectral_split") {
  Rng rng(27);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_hermitian(rng, 4);
    const auto [pos, neg] = spectral_split(a);
    CHECK(max_abs_diff(pos - neg, a) <= 1e-10 * std::max(1.0, a.frobenius_norm()));
    CHECK(neg_squares(pos) == 0);
    CHECK(neg_squares(neg) == 0);
    CHECK(rank(neg) == neg_squares(a));
  }
}

TEST_CASE("inverse") {
  Rng rng(28);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_qmatrix(rng, 3, 3) + 2.0 * QMatrix::identity(3);
    const QMatrix inv = inverse(a);
    CHECK(max_abs_diff(a * inv, QMatrix::identity(3)) <= 1e-10);
    CHECK(max_abs_diff(inv * a, QMatrix::identity(3)) <= 1e-10);
  }
  CHECK_THROWS_AS(inverse(QMatrix(2, 2)), NotPDError);
}

TEST_SUITE_END();
