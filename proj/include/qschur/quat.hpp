#pragma once

#include <cmath>
#include <iosfwd>

#include "qschur/errors.hpp"

namespace qschur {

// Element of the real quaternion algebra, q = w + x i + y j + z k.
struct Quaternion {
  double w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(double real) : w(real) {}  // NOLINT: reals embed implicitly

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double re() const { return w; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  double im_norm() const { return std::sqrt(x * x + y * y + z * z); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  constexpr bool operator==(const Quaternion&) const = default;

  Quaternion inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw ZeroDivisionError{};
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }

  bool is_real(double tol = 1e-12) const {
    return std::abs(x) <= tol && std::abs(y) <= tol && std::abs(z) <= tol;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.norm(); }

// Euclidean inner product of the coefficient 4-vectors.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Unit purely imaginary quaternion; the constructor normalizes.
struct ImagUnit {
  double x{1}, y{0}, z{0};

  ImagUnit() = default;
  ImagUnit(double x_, double y_, double z_) {
    const double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (n < 1e-14) throw InputError("imaginary direction has zero length");
    x = x_ / n;
    y = y_ / n;
    z = z_ / n;
  }

  constexpr Quaternion q() const { return {0, x, y, z}; }
  constexpr double dot(const ImagUnit& o) const { return x * o.x + y * o.y + z * o.z; }
};

// The 2-sphere of quaternions sharing a real part and an imaginary modulus.
struct TwoSphere {
  double re{0};
  double im_norm{1};

  TwoSphere() = default;
  TwoSphere(double re_, double im_norm_) : re(re_), im_norm(im_norm_) {
    if (!(im_norm_ > 0)) throw InputError("a 2-sphere needs a strictly positive imaginary modulus");
  }

  // Any representative; the choice is immaterial for everything built on spheres.
  constexpr Quaternion representative() const { return {re, im_norm, 0, 0}; }
  double abs() const { return std::sqrt(re * re + im_norm * im_norm); }

  Quaternion point(const ImagUnit& dir) const { return Quaternion(re) + dir.q() * im_norm; }

  bool contains(const Quaternion& p, double tol = 1e-12) const {
    return std::abs(p.re() - re) <= tol && std::abs(p.im_norm() - im_norm) <= tol;
  }
};

struct Decomposition {
  double re;
  double im_norm;
  ImagUnit dir;
};

// q = re + dir * im_norm. Throws RealPointError when the direction is undefined.
inline Decomposition decompose(const Quaternion& q) {
  const double s = q.im_norm();
  if (s < 1e-14) throw RealPointError{};
  return {q.re(), s, ImagUnit(q.x, q.y, q.z)};
}

inline Quaternion reconstruct(const Decomposition& d) {
  return Quaternion(d.re) + d.dir.q() * d.im_norm;
}

inline bool same_sphere(const Quaternion& p, const Quaternion& q, double tol = 1e-12) {
  return std::abs(p.re() - q.re()) <= tol && std::abs(p.im_norm() - q.im_norm()) <= tol;
}

inline TwoSphere sphere_of(const Quaternion& q) {
  const double s = q.im_norm();
  if (s < 1e-14) throw RealPointError{};
  return {q.re(), s};
}

}  // namespace qschur
