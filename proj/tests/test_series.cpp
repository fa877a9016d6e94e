#include <complex>
#include <doctest.h>
#include <vector>

#include "helpers.hpp"
#include "qschur/blaschke.hpp"
#include "qschur/kernels.hpp"
#include "qschur/series.hpp"

using namespace qschur;
using test::check_close;

namespace {

using CVec = std::vector<std::complex<double>>;

CVec conv(const CVec& a, const CVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  CVec c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r <= k; ++r) c[k] += a[r] * b[k - r];
  return c;
}

CVec conj_coeffs(const CVec& a) {
  CVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = std::conj(a[k]);
  return c;
}

LSeries random_series(Rng& rng, int degree, double scale = 1.0) {
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (auto& e : c) e = rng.quaternion_box() * scale;
  return LSeries(std::move(c));
}

// Reciprocal by the direct convolution recursion f * g = 1; independent of
// the (f^s)^{-1} f^c route used by star_inv.
LSeries star_inv_recursion(const LSeries& f) {
  const Quaternion inv0 = f.coeff(0).inverse();
  std::vector<Quaternion> g(f.coeffs().size());
  g[0] = inv0;
  for (int n = 1; n <= f.degree(); ++n) {
    Quaternion acc{};
    for (int r = 1; r <= n; ++r) acc += f.coeff(r) * g[static_cast<std::size_t>(n - r)];
    g[static_cast<std::size_t>(n)] = -(inv0 * acc);
  }
  return LSeries(std::move(g));
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("star_mul on hand-expanded inputs") {
  // Degree-2 padding keeps the full product (1 + p i)(1 + p j).
  const LSeries fp(std::vector<Quaternion>{Quaternion(1), Quaternion::i(), Quaternion(0)});
  const LSeries gp(std::vector<Quaternion>{Quaternion(1), Quaternion::j(), Quaternion(0)});
  const LSeries prod = star_mul(fp, gp);
  check_close(prod.coeff(0), Quaternion(1), 0, "constant");
  check_close(prod.coeff(1), Quaternion::i() + Quaternion::j(), 0, "degree 1");
  check_close(prod.coeff(2), Quaternion::k(), 0, "degree 2: i*j");

  Rng rng(31);
  const LSeries h = random_series(rng, 10);
  const LSeries prod_id = star_mul(h, LSeries::constant(Quaternion(1), 10));
  for (int n = 0; n <= 10; ++n) check_close(prod_id.coeff(n), h.coeff(n), 0, "f * 1 = f");
}

TEST_CASE("star_mul matches the pointwise product formula") {
  Rng rng(32);
  int checked = 0;
  while (checked < 100) {
    const LSeries f = random_series(rng, kDefaultDegree, 0.5);
    const LSeries g = random_series(rng, kDefaultDegree, 0.5);
    const Quaternion p = rng.in_ball(0.6);
    const Quaternion fp = eval(f, p);
    if (fp.norm() < 1e-2) continue;
    ++checked;
    const Quaternion rotated = fp.inverse() * p * fp;
    const Quaternion pointwise = fp * eval(g, rotated);
    const Quaternion direct = eval(star_mul(f, g), p);
    // Both factors are polynomials, so the pointwise formula is exact; only
    // the truncation of the convolution to degree N contributes, and its
    // coefficients are bounded by (n+1) Mf Mg.
    const double r = p.norm();
    const int n_trunc = std::min(f.degree(), g.degree());
    const double bound = f.max_coeff_norm() * g.max_coeff_norm() * (n_trunc + 2) *
                             std::pow(r, n_trunc + 1) / ((1 - r) * (1 - r)) +
                         1e-10;
    INFO("p = " << p);
    CHECK((pointwise - direct).norm() <= bound);
  }
}

TEST_CASE("star_mul matches the splitting-lemma formula") {
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    const LSeries f = random_series(rng, 12);
    const LSeries g = random_series(rng, 12);
    const ImagUnit i_dir = rng.imag_unit();
    // Any unit imaginary orthogonal to i_dir.
    const Quaternion raw = rng.imag_unit().q();
    const Quaternion proj = raw - i_dir.q() * i_dir.dot(ImagUnit(raw.x, raw.y, raw.z));
    if (proj.norm() < 1e-3) continue;
    const ImagUnit j_dir(proj.x, proj.y, proj.z);

    const SplitSeries sf = restrict_split(f, i_dir, j_dir);
    const SplitSeries sg = restrict_split(g, i_dir, j_dir);
    SplitSeries sp;
    // (F + GJ)(H + LJ) = (FH - G conj∘L) + (G conj∘H + F L) J at coefficient level.
    const CVec fh = conv(sf.f, sg.f);
    const CVec gl = conv(sf.g, conj_coeffs(sg.g));
    const CVec gh = conv(sf.g, conj_coeffs(sg.f));
    const CVec fl = conv(sf.f, sg.g);
    sp.f.resize(fh.size());
    sp.g.resize(fh.size());
    for (std::size_t k = 0; k < fh.size(); ++k) {
      sp.f[k] = fh[k] - gl[k];
      sp.g[k] = gh[k] + fl[k];
    }
    const LSeries via_split = assemble_split(sp, i_dir, j_dir);
    const LSeries direct = star_mul(f, g);
    for (int n = 0; n <= direct.degree(); ++n)
      check_close(direct.coeff(n), via_split.coeff(n), 1e-12 * (1 + direct.max_coeff_norm()),
                  "splitting oracle");
  }
}

TEST_CASE("star product is associative") {
  Rng rng(34);
  for (int t = 0; t < 50; ++t) {
    const LSeries f = random_series(rng, 10), g = random_series(rng, 10), h = random_series(rng, 10);
    const LSeries lhs = star_mul(star_mul(f, g), h);
    const LSeries rhs = star_mul(f, star_mul(g, h));
    for (int n = 0; n <= lhs.degree(); ++n)
      check_close(lhs.coeff(n), rhs.coeff(n), 1e-12 * (1 + lhs.max_coeff_norm()), "assoc");
  }
}

TEST_CASE("conjugate series") {
  const LSeries f(std::vector<Quaternion>{Quaternion(1), Quaternion::i()});
  const LSeries fc = conj_series(f);
  check_close(fc.coeff(1), -Quaternion::i(), 0, "1 + p i -> 1 - p i");

  Rng rng(35);
  const LSeries real_f(std::vector<Quaternion>{Quaternion(2), Quaternion(-1), Quaternion(0.5)});
  const LSeries real_fc = conj_series(real_f);
  for (int n = 0; n <= 2; ++n) check_close(real_fc.coeff(n), real_f.coeff(n), 0, "real fixed");

  const LSeries g = random_series(rng, 9);
  const LSeries gcc = conj_series(conj_series(g));
  for (int n = 0; n <= 9; ++n) check_close(gcc.coeff(n), g.coeff(n), 0, "involution");
}

TEST_CASE("symmetrize") {
  {
    const LSeries f(std::vector<Quaternion>{Quaternion(1), Quaternion::i() * 0.5});
    const LSeries fs = symmetrize(f);
    CHECK(fs.coeff(0).w == 1.0);
    CHECK(fs.coeff(1).w == 0.0);
    CHECK(fs.coeff(1).im_norm() == 0.0);
    // Degree truncates at 1; extend the input to see the quadratic term.
    const LSeries f2(std::vector<Quaternion>{Quaternion(1), Quaternion::i() * 0.5, Quaternion(0)});
    const LSeries fs2 = symmetrize(f2);
    CHECK(std::abs(fs2.coeff(2).w - 0.25) <= 1e-15);
  }
  {
    const LSeries f(std::vector<Quaternion>{Quaternion(1), Quaternion(-1), Quaternion(0)});
    const LSeries fs = symmetrize(f);
    CHECK(fs.coeff(0).w == 1.0);
    CHECK(fs.coeff(1).w == -2.0);
    CHECK(fs.coeff(2).w == 1.0);
  }
  Rng rng(36);
  for (int t = 0; t < 100; ++t) {
    const LSeries f = random_series(rng, 12);
    const LSeries fs = symmetrize(f);  // throws if any coefficient has imaginary residue
    CHECK(is_slice_preserving(fs));
  }
}

TEST_CASE("star_inv") {
  {
    // (1 - p qbar)^{-star} is the geometric column sum for q = i/2.
    const Quaternion q = Quaternion::i() * 0.5;
    std::vector<Quaternion> c(33, Quaternion(0));
    c[0] = Quaternion(1);
    c[1] = -q.conj();
    const LSeries inv = star_inv(LSeries(std::move(c)));
    Quaternion qbar_pow(1);
    for (int n = 0; n <= 32; ++n) {
      check_close(inv.coeff(n), qbar_pow, 1e-14, "geometric coefficients");
      qbar_pow = qbar_pow * q.conj();
    }
  }
  {
    const LSeries one = LSeries::constant(Quaternion(1), 8);
    const LSeries inv = star_inv(one);
    check_close(inv.coeff(0), Quaternion(1), 0, "1^{-star}");
    for (int n = 1; n <= 8; ++n) check_close(inv.coeff(n), Quaternion(0), 0, "tail");
  }
  CHECK_THROWS_AS(star_inv(LSeries::monomial(1, Quaternion(1), 4)), NonInvertibleConstantTermError);

  Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    LSeries f = random_series(rng, 16);
    if (f.coeff(0).norm() < 0.1) f.coeff(0) += Quaternion(0.5);
    const LSeries inv = star_inv(f);
    const LSeries prod = star_mul(f, inv);
    check_close(prod.coeff(0), Quaternion(1), 1e-10, "constant term");
    for (int n = 1; n <= prod.degree(); ++n)
      check_close(prod.coeff(n), Quaternion(0), 1e-10 * (1 + inv.max_coeff_norm()), "higher terms");
    const LSeries oracle = star_inv_recursion(f);
    for (int n = 0; n <= f.degree(); ++n)
      check_close(inv.coeff(n), oracle.coeff(n), 1e-10 * (1 + oracle.max_coeff_norm()),
                  "recursion oracle");
  }
}

TEST_CASE("eval") {
  const LSeries f(std::vector<Quaternion>{Quaternion(1), Quaternion(0), Quaternion(1)});
  check_close(eval(f, Quaternion::j()), Quaternion(0), 0, "1 + p^2 at j");

  {
    const Quaternion q = Quaternion::i() * 0.5;
    std::vector<Quaternion> c(static_cast<std::size_t>(kDefaultDegree) + 1);
    Quaternion qbar_pow(1);
    for (int n = 0; n <= kDefaultDegree; ++n) {
      c[static_cast<std::size_t>(n)] = qbar_pow;
      qbar_pow = qbar_pow * q.conj();
    }
    const LSeries hardy_col(std::move(c));
    const Quaternion p(0.5);
    const Quaternion closed = Quaternion(16.0 / 17.0) * (Quaternion(1) - p * q);
    const double bound = tail_bound(hardy_col, 0.5) + 1e-12;
    CHECK((eval(hardy_col, p) - closed).norm() <= bound);
    CHECK((hardy_kernel(p, q) - closed).norm() <= 1e-14);
  }

  const LSeries c = LSeries::constant(Quaternion{0.25, 1, -2, 3}, 6);
  Rng rng(38);
  for (int t = 0; t < 20; ++t)
    check_close(eval(c, rng.quaternion_box()), Quaternion{0.25, 1, -2, 3}, 0, "constant eval");
}

TEST_CASE("backward shift") {
  const LSeries f(std::vector<Quaternion>{Quaternion(1), Quaternion::i(), Quaternion::j()});
  const LSeries s = backward_shift(f);
  CHECK(s.degree() == 1);
  check_close(s.coeff(0), Quaternion::i(), 0, "shifted");
  check_close(s.coeff(1), Quaternion::j(), 0, "shifted");

  const LSeries z = backward_shift(LSeries::constant(Quaternion(5)));
  CHECK(z.degree() == 0);
  check_close(z.coeff(0), Quaternion(0), 0, "constant shifts to zero");

  Rng rng(39);
  const LSeries g = random_series(rng, 10);
  LSeries walk = g;
  for (int l = 0; l <= 10; ++l) {
    check_close(walk.coeff(0), g.coeff(l), 0, "coeff_l via l-fold shift");
    walk = backward_shift(walk);
  }
}

TEST_CASE("restrict_split") {
  {
    const LSeries f(std::vector<Quaternion>{Quaternion(1), Quaternion::k()});
    const SplitSeries s = restrict_split(f, ImagUnit(1, 0, 0), ImagUnit(0, 1, 0));
    // k = i j, so the J-half of the degree-1 coefficient is i.
    CHECK(std::abs(s.f[1]) <= 1e-15);
    CHECK(std::abs(s.g[1] - std::complex<double>(0, 1)) <= 1e-15);
  }
  {
    const LSeries f(std::vector<Quaternion>{Quaternion(2), Quaternion(-0.5)});
    const SplitSeries s = restrict_split(f, ImagUnit(1, 0, 0), ImagUnit(0, 1, 0));
    CHECK(std::abs(s.g[0]) == 0.0);
    CHECK(std::abs(s.g[1]) == 0.0);
  }
  CHECK_THROWS_AS(restrict_split(LSeries::constant(Quaternion(1)), ImagUnit(1, 0, 0),
                                 ImagUnit(1, 0, 0)),
                  NotOrthogonalError);

  Rng rng(40);
  for (int t = 0; t < 50; ++t) {
    const LSeries f = random_series(rng, 8);
    const ImagUnit i_dir = rng.imag_unit();
    const Quaternion raw = rng.imag_unit().q();
    const Quaternion proj = raw - i_dir.q() * i_dir.dot(ImagUnit(raw.x, raw.y, raw.z));
    if (proj.norm() < 1e-3) continue;
    const ImagUnit j_dir(proj.x, proj.y, proj.z);
    const LSeries back = assemble_split(restrict_split(f, i_dir, j_dir), i_dir, j_dir);
    for (int n = 0; n <= 8; ++n) check_close(back.coeff(n), f.coeff(n), 1e-14, "bijection");
  }
}

TEST_CASE("ext_from_slice") {
  Rng rng(41);
  // p^2 restricted to a slice plane reproduces itself anywhere on the sphere.
  for (int t = 0; t < 50; ++t) {
    const ImagUnit i_dir = rng.imag_unit();
    const Quaternion p = rng.in_ball(0.9);
    if (p.im_norm() < 1e-6) continue;
    const auto d = decompose(p);
    const Quaternion z = Quaternion(d.re) + i_dir.q() * d.im_norm;
    const Quaternion fz = z * z;
    const Quaternion fzbar = z.conj() * z.conj();
    check_close(ext_from_slice(fz, fzbar, i_dir, p), p * p, 1e-12, "p^2 extension");
  }
  // Constant data extends to the same constant on the whole sphere.
  const Quaternion c{0.3, -1, 2, 0.5};
  check_close(ext_from_slice(c, c, ImagUnit(1, 0, 0), Quaternion{0, 0, 0.7, 0}), c, 0, "constant");
  // At a point of the slice plane itself the extension returns the value.
  for (int t = 0; t < 20; ++t) {
    const ImagUnit i_dir = rng.imag_unit();
    const double x = rng.uniform(-0.7, 0.7), y = rng.uniform(1e-3, 0.7);
    const Quaternion z = Quaternion(x) + i_dir.q() * y;
    const Quaternion fz = rng.quaternion_box(), fzbar = rng.quaternion_box();
    check_close(ext_from_slice(fz, fzbar, i_dir, z), fz, 1e-12 * (1 + fz.norm()), "slice identity");
  }
}

TEST_CASE("is_slice_preserving") {
  const TwoSphere s(0.25, 0.5);
  CHECK(is_slice_preserving(factor_sphere(s)));
  CHECK_FALSE(is_slice_preserving(LSeries(std::vector<Quaternion>{Quaternion(1), Quaternion::i()})));
  Rng rng(42);
  for (int t = 0; t < 20; ++t) CHECK(is_slice_preserving(symmetrize(random_series(rng, 10))));
}

TEST_CASE("conjugation is an evaluation-level anti-homomorphism") {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const LSeries f = random_series(rng, 12, 0.7);
    const LSeries g = random_series(rng, 12, 0.7);
    const LSeries prod = star_mul(f, g);
    const RSeries rprod = star_mul_right(adjoint_series(g), adjoint_series(f));
    for (int n = 0; n <= prod.degree(); ++n)
      check_close(prod.coeff(n).conj(), rprod.coeff(n), 1e-13 * (1 + prod.max_coeff_norm()),
                  "coefficients");
    const Quaternion p = rng.in_ball(0.6);
    check_close(eval(prod, p).conj(), eval(rprod, p),
                tail_bound(prod, p.norm()) * 2 + 1e-12, "evaluation");
  }
}

TEST_CASE("boundary modulus transport") {
  Rng rng(44);
  const double r = 1.0 - 1e-6;
  for (int t = 0; t < 50; ++t) {
    Quaternion a = rng.in_ball(0.7);
    if (a.norm() < 0.1) a += Quaternion(0.3);
    const ImagUnit i_dir = rng.imag_unit();
    const double theta = rng.uniform(0, 6.28318530717958648);
    const Quaternion boundary = Quaternion(std::cos(theta)) + i_dir.q() * std::sin(theta);
    const Quaternion p = boundary * r;

    const LSeries g = random_series(rng, 5);
    const Quaternion fp = factor_point_closed(a, p);
    const Quaternion u = fp * (1.0 / fp.norm());
    const Quaternion rotated = u.conj() * p * u;           // |rotated| = r
    const Quaternion boundary_rotated = u.conj() * boundary * u;

    const double lhs = (fp * eval(g, rotated)).norm();
    const double rhs = eval(g, boundary_rotated).norm();

    double lip = 0, sum = 0;
    for (int n = 0; n <= g.degree(); ++n) {
      lip += n * g.coeff(n).norm();
      sum += g.coeff(n).norm();
    }
    const double bound = sum * std::abs(1.0 - fp.norm()) + lip * (1.0 - r) + 1e-10;
    CHECK(std::abs(lhs - rhs) <= bound);
  }
}

TEST_CASE("monomial slide identities for matrix series") {
  Rng rng(45);
  for (int t = 0; t < 10; ++t) {
    std::vector<QMatrix> coeffs;
    for (int n = 0; n <= 8; ++n) coeffs.push_back(test::random_qmatrix(rng, 2, 2));
    const MatSeries f(std::move(coeffs));
    const MatSeries c_const = MatSeries::constant(test::random_qmatrix(rng, 2, 2), 8);
    const MatSeries p_mon = MatSeries::monomial(1, QMatrix::identity(2), 8);

    const MatSeries lhs = star_mul(p_mon, star_mul(c_const, f));
    const MatSeries mid = star_mul(c_const, star_mul(p_mon, f));
    const MatSeries rhs = star_mul(c_const, star_mul(f, p_mon));
    for (int n = 0; n <= lhs.degree(); ++n) {
      CHECK(max_abs_diff(lhs.coeff(n), mid.coeff(n)) == 0.0);
      CHECK(max_abs_diff(mid.coeff(n), rhs.coeff(n)) == 0.0);
    }
  }
}

TEST_CASE("matrix star_inv") {
  Rng rng(46);
  for (int t = 0; t < 10; ++t) {
    std::vector<QMatrix> coeffs;
    coeffs.push_back(test::random_qmatrix(rng, 2, 2) + 2.0 * QMatrix::identity(2));
    for (int n = 1; n <= 10; ++n) coeffs.push_back(test::random_qmatrix(rng, 2, 2));
    const MatSeries f(std::move(coeffs));
    const MatSeries inv = star_inv(f);
    const MatSeries prod = star_mul(f, inv);
    CHECK(max_abs_diff(prod.coeff(0), QMatrix::identity(2)) <= 1e-10);
    for (int n = 1; n <= prod.degree(); ++n)
      CHECK(prod.coeff(n).max_abs() <= 1e-9 * (1 + inv.coeff(0).max_abs() + f.max_coeff_norm()));
  }
  CHECK_THROWS_AS(star_inv(MatSeries::constant(QMatrix(2, 2), 4)), NonInvertibleConstantTermError);
}

TEST_SUITE_END();
