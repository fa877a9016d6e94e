#include "qschur/blaschke.hpp"

#include <cmath>
#include <sstream>

namespace qschur {

namespace {

void require_point(const Quaternion& a) {
  const double n = a.norm();
  if (n < 1e-14) throw ZeroPointError{};
  if (n >= 1.0) {
    std::ostringstream os;
    os << "Blaschke point has modulus " << n << " >= 1";
    throw NotInBallError(os.str());
  }
}

struct Factor {
  enum Kind { kMonomial, kSphere, kPoint } kind;
  int power = 1;
  TwoSphere sphere{0, 1};
  Quaternion a;
};

Quaternion factor_value(const Factor& f, const Quaternion& p) {
  switch (f.kind) {
    case Factor::kMonomial: {
      Quaternion v(1);
      for (int k = 0; k < f.power; ++k) v = v * p;
      return v;
    }
    case Factor::kSphere: {
      Quaternion v(1);
      for (int k = 0; k < f.power; ++k) v = v * factor_sphere_closed(f.sphere, p);
      return v;
    }
    case Factor::kPoint:
      return factor_point_closed(f.a, p);
  }
  return Quaternion(1);
}

// Pointwise value of the star product of the factors: each factor is
// evaluated at the running rotated point and rotates it further.
Quaternion chain_eval(const std::vector<Factor>& chain, const Quaternion& p) {
  Quaternion acc(1);
  Quaternion cur = p;
  for (const Factor& f : chain) {
    const Quaternion v = factor_value(f, cur);
    const double n = v.norm();
    acc = acc * v;
    if (n < 1e-300) return acc;  // a vanishing factor kills the product
    const Quaternion u = v * (1.0 / n);
    cur = u.conj() * cur * u;
  }
  return acc;
}

}  // namespace

LSeries factor_point(const Quaternion& a, int degree) {
  require_point(a);
  const double mod = a.norm();
  const double drop = mod - 1.0 / mod;
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  c[0] = Quaternion(mod);
  Quaternion abar_pow(1);
  const Quaternion abar = a.conj();
  for (int n = 1; n <= degree; ++n) {
    abar_pow = abar_pow * abar;
    c[static_cast<std::size_t>(n)] = abar_pow * drop;
  }
  return LSeries(std::move(c));
}

Quaternion factor_point_closed(const Quaternion& a, const Quaternion& p) {
  require_point(a);
  const double mod = a.norm();
  const Quaternion sym = Quaternion(1) - 2.0 * a.re() * p + (mod * mod) * (p * p);
  if (sym.norm() < 1e-14) throw PoleSphereError{};
  const Quaternion lam_c = Quaternion(1) - p * a;
  const Quaternion u = lam_c * (1.0 / lam_c.norm());
  const Quaternion ptilde = u.conj() * p * u;
  const Quaternion den = Quaternion(1) - ptilde * a.conj();
  return den.inverse() * (a - ptilde) * (a.conj() * (1.0 / mod));
}

LSeries factor_sphere(const TwoSphere& s, int degree) {
  if (s.abs() >= 1.0) throw NotInBallError("sphere is not inside the open unit ball");
  const double re = s.re;
  const double mod2 = s.re * s.re + s.im_norm * s.im_norm;
  std::vector<double> den(static_cast<std::size_t>(degree) + 1, 0.0);
  den[0] = 1.0;
  if (degree >= 1) den[1] = -2.0 * re;
  if (degree >= 2) den[2] = mod2;
  const std::vector<double> u = detail::invert_real_series(den);
  const double num[3] = {mod2, -2.0 * re, 1.0};
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    double acc = 0;
    for (int r = 0; r <= 2 && r <= k; ++r) acc += num[r] * u[static_cast<std::size_t>(k - r)];
    c[static_cast<std::size_t>(k)] = Quaternion(acc);
  }
  return LSeries(std::move(c));
}

Quaternion factor_sphere_closed(const TwoSphere& s, const Quaternion& p) {
  if (s.abs() >= 1.0) throw NotInBallError("sphere is not inside the open unit ball");
  const double re = s.re;
  const double mod2 = s.re * s.re + s.im_norm * s.im_norm;
  const Quaternion p2 = p * p;
  const Quaternion den = Quaternion(1) - 2.0 * re * p + mod2 * p2;
  if (den.norm() < 1e-14) throw PoleSphereError{};
  const Quaternion num = Quaternion(mod2) - 2.0 * re * p + p2;
  return den.inverse() * num;
}

namespace {

void validate_zero_set(const std::vector<PointZero>& points, const std::vector<SphereZero>& spheres,
                       int origin_mult) {
  if (origin_mult < 0) throw InputError("origin multiplicity must be >= 0");
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_point(points[i].a);
    if (points[i].mult < 1) throw InputError("point multiplicity must be >= 1");
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (same_sphere(points[i].a, points[j].a)) {
        std::ostringstream os;
        os << "points " << i << " and " << j << " lie on the same sphere";
        throw DuplicateSphereError(os.str());
      }
    }
  }
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    if (spheres[i].sphere.abs() >= 1.0)
      throw NotInBallError("sphere is not inside the open unit ball");
    if (spheres[i].mult < 1) throw InputError("sphere multiplicity must be >= 1");
    for (std::size_t j = i + 1; j < spheres.size(); ++j) {
      if (std::abs(spheres[i].sphere.re - spheres[j].sphere.re) <= 1e-12 &&
          std::abs(spheres[i].sphere.im_norm - spheres[j].sphere.im_norm) <= 1e-12) {
        std::ostringstream os;
        os << "spheres " << i << " and " << j << " coincide";
        throw DuplicateSphereError(os.str());
      }
    }
  }
}

std::vector<Factor> base_chain(const std::vector<SphereZero>& spheres, int origin_mult) {
  std::vector<Factor> chain;
  if (origin_mult > 0) chain.push_back({Factor::kMonomial, origin_mult, TwoSphere{0, 1}, {}});
  for (const SphereZero& s : spheres)
    chain.push_back({Factor::kSphere, s.mult, s.sphere, {}});
  return chain;
}

}  // namespace

BlaschkeProduct product_build(const std::vector<PointZero>& points,
                              const std::vector<SphereZero>& spheres, int degree,
                              int origin_mult) {
  validate_zero_set(points, spheres, origin_mult);
  std::vector<Factor> chain = base_chain(spheres, origin_mult);

  LSeries series = LSeries::constant(Quaternion(1), degree);
  if (origin_mult > 0)
    series = LSeries::monomial(origin_mult, Quaternion(1), degree);
  for (const SphereZero& s : spheres)
    series = star_mul(series, star_power(factor_sphere(s.sphere, degree), s.mult));

  std::vector<Quaternion> placements;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Quaternion a = points[i].a;
    const Quaternion v = chain_eval(chain, a);
    if (v.norm() < 1e-13) {
      std::ostringstream os;
      os << "point " << i << " is already a zero of the partial product"
         << " (input spheres were not distinct)";
      throw PlacementBreakdownError(os.str());
    }
    const Quaternion u = v * (1.0 / v.norm());
    const Quaternion placed = u.conj() * a * u;
    const LSeries fp = factor_point(placed, degree);
    series = star_mul(series, star_power(fp, points[i].mult));
    for (int m = 0; m < points[i].mult; ++m) {
      placements.push_back(placed);
      chain.push_back({Factor::kPoint, 1, TwoSphere{0, 1}, placed});
    }
  }
  return {std::move(series), std::move(placements)};
}

Quaternion product_eval(const std::vector<PointZero>& points, const std::vector<SphereZero>& spheres,
                        const std::vector<Quaternion>& placements, const Quaternion& p,
                        int origin_mult) {
  std::vector<Factor> chain = base_chain(spheres, origin_mult);
  std::size_t used = 0;
  for (const PointZero& pt : points) {
    for (int m = 0; m < pt.mult; ++m) {
      if (used >= placements.size()) throw InputError("placement list is too short");
      chain.push_back({Factor::kPoint, 1, TwoSphere{0, 1}, placements[used++]});
    }
  }
  return chain_eval(chain, p);
}

}  // namespace qschur
