// Thin OpenMP wrapper.  Every parallel loop in the library goes through
// parallel_for so the thread count is explicit and the iteration->thread
// mapping never affects results (each index owns its output slice).
#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kifmm {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// 0 means "use all hardware threads".
inline int resolve_threads(int requested) {
  if (requested <= 0) return hardware_threads();
  return requested;
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace kifmm
