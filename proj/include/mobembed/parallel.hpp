#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mobembed {

// Caps the OpenMP worker count for all parallel kernels. n <= 0 leaves the
// runtime default. Kernel outputs are bit-identical for any worker count.
inline void set_max_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mobembed
