// Times the OpenMP kernels against their serial twins and checks that both
// paths produce identical bytes.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qschur/blaschke.hpp"
#include "qschur/kernels.hpp"
#include "qschur/parallel.hpp"
#include "qschur/rng.hpp"

namespace {

using qschur::par::SerialSection;

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <class F>
double time_ms(F&& f, int reps) {
  f();  // warm up
  const double t0 = now_ms();
  for (int r = 0; r < reps; ++r) f();
  return (now_ms() - t0) / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, double max_diff) {
  std::printf("%-28s %10.2f ms %10.2f ms %7.2fx   max|diff| = %g\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", qschur::par::max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  qschur::Rng rng(7);

  {  // Gram sampling of a Schur kernel at a realistic acceptance size.
    const qschur::LSeries b = qschur::factor_point({0.3, 0.4, 0.1, 0.0}, 96);
    const qschur::KernelSeries k = qschur::schur_kernel(b);
    std::vector<qschur::Quaternion> points(96);
    std::vector<qschur::QMatrix> vectors(points.size(), qschur::QMatrix::ones(1, 1));
    for (auto& p : points) p = rng.in_ball(0.65);
    qschur::QMatrix g_serial, g_parallel;
    const double ts = time_ms(
        [&] {
          SerialSection serial;
          g_serial = qschur::gram_sample_serial(k, points, vectors).gram;
        },
        3);
    const double tp =
        time_ms([&] { g_parallel = qschur::gram_sample(k, points, vectors).gram; }, 3);
    row("gram_sample 96x96 deg 96", ts, tp, qschur::max_abs_diff(g_serial, g_parallel));
  }

  {  // Kernel grid assembly for a 2x2 matrix symbol.
    std::vector<qschur::QMatrix> coeffs;
    for (int n = 0; n <= 160; ++n) {
      qschur::QMatrix c(2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) c(r, s) = rng.in_ball(0.5);
      coeffs.push_back(std::move(c));
    }
    const qschur::MatSeries theta(std::move(coeffs));
    const qschur::QMatrix j = qschur::QMatrix::identity(2);
    qschur::KernelSeries k_serial(0, 1), k_parallel(0, 1);
    const double ts =
        time_ms([&] { k_serial = qschur::schur_kernel_serial(theta, j, j); }, 3);
    const double tp = time_ms([&] { k_parallel = qschur::schur_kernel(theta, j, j); }, 3);
    double diff = 0;
    for (int m = 0; m <= k_serial.degree(); ++m)
      for (int n = 0; n <= k_serial.degree(); ++n)
        diff = std::max(diff, qschur::max_abs_diff(k_serial.coeff(m, n), k_parallel.coeff(m, n)));
    row("schur_kernel 2x2 deg 160", ts, tp, diff);
  }

  {  // Batch evaluation of a long series.
    const qschur::LSeries b = qschur::factor_point({0.2, 0.5, -0.3, 0.1}, 256);
    std::vector<qschur::Quaternion> points(20000);
    for (auto& p : points) p = rng.in_ball(0.7);
    std::vector<qschur::Quaternion> v_serial, v_parallel;
    const double ts = time_ms([&] { v_serial = qschur::eval_batch_serial(b, points); }, 3);
    const double tp = time_ms([&] { v_parallel = qschur::eval_batch(b, points); }, 3);
    double diff = 0;
    for (std::size_t i = 0; i < v_serial.size(); ++i)
      diff = std::max(diff, (v_serial[i] - v_parallel[i]).norm());
    row("eval_batch 20k pts deg 256", ts, tp, diff);
  }

  return 0;
}
