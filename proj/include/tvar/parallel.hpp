#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tvar {

// Runtime switch for the OpenMP kernels. TVAR_SERIAL=1 forces the serial
// paths; tests use it to compare both.
inline bool parallel_enabled() {
#ifdef _OPENMP
  const char* s = std::getenv("TVAR_SERIAL");
  if (s && s[0] == '1') return false;
  return omp_get_max_threads() > 1;
#else
  return false;
#endif
}

// Deterministic parallel loop: iterations write to disjoint slots indexed by
// i, so the merged result does not depend on the schedule.
template <class F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
  if (parallel_enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace tvar
