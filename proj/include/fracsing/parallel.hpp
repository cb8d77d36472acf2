// parallel.hpp
//
// Deterministic parallel reductions. Sums are accumulated into a fixed
// number of chunks regardless of thread count, then combined in chunk
// order, so results are bit-identical across runs and thread counts.

#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fracsing::par {

inline constexpr std::size_t kChunks = 256;

// Deterministic parallel sum of f(i) for i in [0, n).
template <class F>
double det_sum(std::size_t n, F&& f) {
  if (n == 0) return 0.0;
  const std::size_t nchunks = n < kChunks ? n : kChunks;
  std::vector<double> partial(nchunks, 0.0);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < (long long)nchunks; ++c) {
    const std::size_t lo = (std::size_t)c * n / nchunks;
    const std::size_t hi = ((std::size_t)c + 1) * n / nchunks;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    partial[(std::size_t)c] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

// Parallel elementwise map: out[i] = f(i). Each index written once, so
// deterministic by construction.
template <class F>
void par_for(std::size_t n, F&& f) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < (long long)n; ++i) f((std::size_t)i);
}

inline int num_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Serial reference implementations, kept for testing and benchmarks.
namespace ref {

template <class F>
double sum(std::size_t n, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += f(i);
  return s;
}

template <class F>
void seq_for(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace ref

}  // namespace fracsing::par
