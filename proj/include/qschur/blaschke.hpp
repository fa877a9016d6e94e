#pragma once

#include <vector>

#include "qschur/series.hpp"

namespace qschur {

// Prescribed zero at an interior point, with multiplicity.
struct PointZero {
  Quaternion a;
  int mult = 1;
};

// Prescribed zero on a whole 2-sphere inside the ball.
struct SphereZero {
  TwoSphere sphere;
  int mult = 1;
};

// Series of the Blaschke factor at a: |a| + sum_n p^{n+1} abar^{n+1} (|a| - 1/|a|).
LSeries factor_point(const Quaternion& a, int degree = kDefaultDegree);

// Pointwise value of the Blaschke factor at a, through the slide
// ptilde = (1 - p a)^{-1} p (1 - p a): B_a(p) = (1 - ptilde abar)^{-1} (a - ptilde) abar/|a|.
// Exact at any p off the pole sphere [1/a].
Quaternion factor_point_closed(const Quaternion& a, const Quaternion& p);

// Real-coefficient series of the factor vanishing on the given sphere:
// (1 - 2 Re(a) p + p^2 |a|^2)^{-1} (|a|^2 - 2 Re(a) p + p^2).
LSeries factor_sphere(const TwoSphere& s, int degree = kDefaultDegree);

// Pointwise value of the sphere factor (closed form; real coefficients make
// the quotient unambiguous).
Quaternion factor_sphere_closed(const TwoSphere& s, const Quaternion& p);

struct BlaschkeProduct {
  LSeries series;
  // One placement per point factor, in input order, repeated per multiplicity.
  std::vector<Quaternion> placements;
};

// Product with the prescribed zero set: sphere factors first (pointwise
// powers), then point factors in input order with each placement rotated by
// the value of the partial product, so every prescribed point stays a zero.
// origin_mult prepends the monomial factor p^origin_mult.
BlaschkeProduct product_build(const std::vector<PointZero>& points,
                              const std::vector<SphereZero>& spheres, int degree = kDefaultDegree,
                              int origin_mult = 0);

// Pointwise evaluation of the same product (chained rotations; no truncation).
Quaternion product_eval(const std::vector<PointZero>& points,
                        const std::vector<SphereZero>& spheres,
                        const std::vector<Quaternion>& placements, const Quaternion& p,
                        int origin_mult = 0);

}  // namespace qschur
