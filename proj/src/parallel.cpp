#include "lapgraph/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapgraph {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_thread_cap(int threads) {
#ifdef _OPENMP
  if (threads < 1) threads = omp_get_num_procs();
  omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

void apply_thread_env() {
  const char* env = std::getenv("LAPGRAPH_THREADS");
  if (env == nullptr || *env == '\0') return;
  try {
    set_thread_cap(std::stoi(env));
  } catch (const std::exception&) {
    // Unparseable values leave the default in place.
  }
}

}  // namespace lapgraph
