#include "carlson/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carlson {

namespace {
int g_workers = 0;
}

void set_worker_count(int n) {
  g_workers = n > 0 ? n : 0;
#ifdef _OPENMP
  if (g_workers > 0) omp_set_num_threads(g_workers);
#endif
}

int worker_count() {
  if (g_workers > 0) return g_workers;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace carlson
