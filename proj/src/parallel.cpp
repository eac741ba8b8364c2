#include "stml/parallel.hpp"

#include <atomic>

namespace stml {
namespace parallel {

namespace {
std::atomic<bool> g_enabled{true};
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

bool in_parallel_region() {
#ifdef STML_HAVE_OPENMP
  return omp_in_parallel() != 0;
#else
  return false;
#endif
}

}  // namespace parallel
}  // namespace stml
