#pragma once

#include <cstdint>
#include <random>

#include "qschur/quat.hpp"

namespace qschur {

// Seeded generator with platform-independent draws (std distributions are not
// portable across library implementations, so the mapping from engine words to
// doubles is done here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  // Uniform on the component box [-1,1]^4.
  Quaternion quaternion_box() {
    return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
  }

  // Uniform in the closed ball of the given radius (box draw + rejection).
  Quaternion in_ball(double radius) {
    for (;;) {
      const Quaternion q = quaternion_box();
      if (q.norm_sq() <= 1.0) return q * radius;
    }
  }

  ImagUnit imag_unit() {
    for (;;) {
      const double a = gaussian(), b = gaussian(), c = gaussian();
      if (a * a + b * b + c * c > 1e-12) return {a, b, c};
    }
  }

  Quaternion unit_quaternion() {
    for (;;) {
      const Quaternion q{gaussian(), gaussian(), gaussian(), gaussian()};
      const double n = q.norm();
      if (n > 1e-6) return q * (1.0 / n);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace qschur
