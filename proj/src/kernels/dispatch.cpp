#include <atomic>
#include <cstdlib>
#include <cstring>

#include "mrees/error.hpp"
#include "mrees/kernels.hpp"

namespace mrees::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MREES_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("MREES_KERNELS"); env != nullptr && std::strcmp(env, "scalar") == 0) {
    return Backend::Scalar;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

bool backend_available(Backend backend) { return backend == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) throw PreconditionError("kernel backend not available on this CPU");
  current().store(backend, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

void halfspace_heights(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid,
                       std::span<std::int64_t> out) {
  if (static_cast<std::int64_t>(out.size()) != grid.columns()) {
    throw PreconditionError("halfspace_heights: output size does not match grid");
  }
#ifdef MREES_HAVE_AVX2
  if (active_backend() == Backend::Avx2 && avx2::halfspace_heights_in_range(halfspaces, grid)) {
    avx2::halfspace_heights(halfspaces, grid, out);
    return;
  }
#endif
  scalar::halfspace_heights(halfspaces, grid, out);
}

std::int64_t count_outside(std::span<const Point3> generators, const Point3& box) {
#ifdef MREES_HAVE_AVX2
  if (active_backend() == Backend::Avx2 && avx2::count_outside_in_range(generators, box)) {
    return avx2::count_outside(generators, box);
  }
#endif
  return scalar::count_outside(generators, box);
}

}  // namespace mrees::kernels
