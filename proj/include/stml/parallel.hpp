#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef STML_HAVE_OPENMP
#include <omp.h>
#endif

namespace stml {
namespace parallel {

/// Process-wide switch for the OpenMP kernels. The serial and parallel paths
/// produce bit-identical results by construction (fixed reduction topology);
/// the switch exists for the serial reference runs in tests and benchmarks.
void set_enabled(bool on);
bool enabled();

bool in_parallel_region();

/// Fills out[i] = fn(i) for i in [0, count), in parallel when enabled.
/// Each slot is written exactly once, so the result does not depend on the
/// schedule.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, const T& proto, Fn&& fn) {
  std::vector<T> out(count, proto);
#ifdef STML_HAVE_OPENMP
  if (enabled() && !in_parallel_region() && count > 1) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

/// max over i of fn(i) with the smallest attaining index; the combine is
/// order-independent, so the result is thread-count invariant.
template <class Fn>
std::pair<double, std::size_t> max_indexed(std::size_t count, Fn&& fn) {
  double best = -1.0;
  std::size_t arg = 0;
#ifdef STML_HAVE_OPENMP
  if (enabled() && !in_parallel_region() && count > 1) {
#pragma omp parallel
    {
      double local = -1.0;
      std::size_t local_arg = 0;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(count); ++i) {
        double v = fn(static_cast<std::size_t>(i));
        if (v > local || (v == local && static_cast<std::size_t>(i) < local_arg)) {
          local = v;
          local_arg = static_cast<std::size_t>(i);
        }
      }
#pragma omp critical
      {
        if (local > best || (local == best && local_arg < arg)) {
          best = local;
          arg = local_arg;
        }
      }
    }
    return {best, arg};
  }
#endif
  for (std::size_t i = 0; i < count; ++i) {
    double v = fn(i);
    if (v > best || (v == best && i < arg)) {
      best = v;
      arg = i;
    }
  }
  return {best, arg};
}

}  // namespace parallel

/// Fixed-topology pairwise (tree) sum: splits in halves recursively, so the
/// result is independent of evaluation order and thread count.
template <class T>
T pairwise_sum(const std::vector<T>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return terms[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

template <class T>
T pairwise_sum(const std::vector<T>& terms) {
  return pairwise_sum(terms, 0, terms.size());
}

}  // namespace stml
