#pragma once

#include <cstddef>

namespace toric {

/// Execution policy for the batch kernels (per-cone analysis, lattice
/// point scans, membership sampling).  Every kernel has identical
/// output under both policies; tests compare them and the bench tool
/// times them.
enum class Exec { serial, parallel };

/// Runs fn(i) for i in [0, n).  Iterations must be independent and
/// write only to disjoint slots, so the result does not depend on the
/// schedule.
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
  }
}

}  // namespace toric
