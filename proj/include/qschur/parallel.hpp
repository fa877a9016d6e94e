#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qschur::par {

// Process-wide switch; the parallel kernels write each output slot exactly
// once, so toggling it never changes results, only timing.
bool enabled();
void set_enabled(bool on);

int max_threads();

template <class F>
void for_index(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (enabled() && n > 1) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) f(static_cast<std::size_t>(k));
    return;
  }
#endif
  for (std::size_t k = 0; k < n; ++k) f(k);
}

// RAII guard forcing the serial path inside a scope.
class SerialSection {
 public:
  SerialSection() : was_(enabled()) { set_enabled(false); }
  ~SerialSection() { set_enabled(was_); }
  SerialSection(const SerialSection&) = delete;
  SerialSection& operator=(const SerialSection&) = delete;

 private:
  bool was_;
};

}  // namespace qschur::par
