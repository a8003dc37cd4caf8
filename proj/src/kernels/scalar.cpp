#include <algorithm>

#include "mrees/kernels.hpp"

namespace mrees::kernels::scalar {

namespace {

// Ceiling of num / den for den > 0.
std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den) != 0 && num > 0) ++q;
  return q;
}

}  // namespace

void halfspace_heights(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid,
                       std::span<std::int64_t> out) {
  for (std::int64_t p0 = 0; p0 < grid.extent0; ++p0) {
    for (std::int64_t p1 = 0; p1 < grid.extent1; ++p1) {
      std::int64_t z = 0;
      for (const auto& h : halfspaces) {
        const std::int64_t rest = h.offset - h.prefix0 * p0 - h.prefix1 * p1;
        if (h.column == 0) {
          if (rest > 0) {
            z = kNoHeight;
            break;
          }
        } else {
          z = std::max(z, ceil_div(rest, h.column));
        }
      }
      out[static_cast<std::size_t>(p0 * grid.extent1 + p1)] = z > grid.zcap ? kNoHeight : z;
    }
  }
}

std::int64_t count_outside(std::span<const Point3> generators, const Point3& box) {
  std::int64_t outside = 0;
  for (std::int64_t v0 = 0; v0 < box[0]; ++v0) {
    for (std::int64_t v1 = 0; v1 < box[1]; ++v1) {
      for (std::int64_t v2 = 0; v2 < box[2]; ++v2) {
        bool inside = false;
        for (const auto& g : generators) {
          if (g[0] <= v0 && g[1] <= v1 && g[2] <= v2) {
            inside = true;
            break;
          }
        }
        if (!inside) ++outside;
      }
    }
  }
  return outside;
}

}  // namespace mrees::kernels::scalar
