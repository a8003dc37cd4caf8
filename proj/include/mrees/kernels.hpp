#pragma once

// Lattice-scan kernels behind the closure and colength computations.
//
// Two kernels, each with a scalar reference and an AVX2 variant selected at
// runtime:
//
//  * halfspace_heights: for every column p of a (d-1)-dimensional prefix grid,
//    the least last coordinate z such that (p, z) satisfies a list of
//    half-spaces with nonnegative normals. This is the inner loop of every
//    integral-closure computation.
//  * count_outside: dense box scan counting lattice points not divisible by
//    any generator; the ground-truth colength.
//
// Coordinates are laid out as (prefix0, prefix1, column). Rings of dimension
// 2 use extent1 == 1, dimension 1 uses extent0 == extent1 == 1.

#include <array>
#include <cstdint>
#include <limits>
#include <span>

namespace mrees::kernels {

enum class Backend { Scalar, Avx2 };

bool backend_available(Backend backend);
/// Backend used by the dispatching entry points. Defaults to AVX2 when the
/// CPU supports it; the MREES_KERNELS=scalar environment variable overrides.
Backend active_backend();
/// Throws PreconditionError if the backend is unavailable on this machine.
void set_backend(Backend backend);
const char* backend_name(Backend backend);

inline constexpr std::int64_t kNoHeight = std::numeric_limits<std::int64_t>::max();

/// prefix0*p0 + prefix1*p1 + column*z >= offset.
struct ColumnHalfspace {
  std::int64_t prefix0 = 0;
  std::int64_t prefix1 = 0;
  std::int64_t column = 0;
  std::int64_t offset = 0;
};

struct ColumnGrid {
  std::int64_t extent0 = 1;
  std::int64_t extent1 = 1;
  std::int64_t zcap = 0;  ///< heights above zcap are reported as kNoHeight

  std::int64_t columns() const { return extent0 * extent1; }
};

using Point3 = std::array<std::int64_t, 3>;

/// out[p0 * extent1 + p1] = least z in [0, zcap] with (p0, p1, z) in every
/// half-space, or kNoHeight. Normals must be nonnegative; out.size() must
/// equal grid.columns().
void halfspace_heights(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid,
                       std::span<std::int64_t> out);

/// Number of v in [0,box[0]) x [0,box[1]) x [0,box[2]) with no generator g <= v.
std::int64_t count_outside(std::span<const Point3> generators, const Point3& box);

namespace scalar {
void halfspace_heights(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid,
                       std::span<std::int64_t> out);
std::int64_t count_outside(std::span<const Point3> generators, const Point3& box);
}  // namespace scalar

namespace avx2 {
/// False when the inputs exceed the exact range of the vector path; the
/// dispatcher then falls back to the scalar kernel.
bool halfspace_heights_in_range(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid);
bool count_outside_in_range(std::span<const Point3> generators, const Point3& box);

void halfspace_heights(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid,
                       std::span<std::int64_t> out);
std::int64_t count_outside(std::span<const Point3> generators, const Point3& box);
}  // namespace avx2

}  // namespace mrees::kernels
