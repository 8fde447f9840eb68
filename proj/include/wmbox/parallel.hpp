#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wmbox {

/// Execution policy for the data-parallel kernels (grid scans, mode
/// expansion, eigenbasis reconstruction). Every kernel has a serial
/// reference path; the OpenMP path must produce the same values, which
/// tests/test_parallel.cpp enforces and tools/wmbox-bench times.
enum class Exec { serial, openmp };

inline int parallel_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Body>
void parallel_for(Exec exec, std::size_t n, const Body& body) {
  if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace wmbox
