#pragma once

namespace lapgraph {

/// Worker threads the parallel kernels may use.
int max_threads();

/// Caps the OpenMP thread count; values < 1 restore the hardware default.
void set_thread_cap(int threads);

/// Applies LAPGRAPH_THREADS from the environment, if set.
void apply_thread_env();

}  // namespace lapgraph
