// AVX2 variants of the lattice kernels. Compiled with -mavx2 only; the
// dispatcher never calls into this file unless the CPU reports AVX2.

#include <immintrin.h>

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <vector>

#include "mrees/kernels.hpp"

namespace mrees::kernels::avx2 {

namespace {

// All products and differences below stay under 2^52, so they are exact in
// double precision. For |rest| < 2^52 a non-integral quotient rest/column sits
// at least 1/column away from the next integer, which is more than half an
// ulp of the quotient; the rounded quotient therefore has the same ceiling.
constexpr std::int64_t kExactLimit = std::int64_t{1} << 50;
constexpr std::int64_t kInt32Limit = std::int64_t{1} << 30;

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

bool halfspace_heights_in_range(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid) {
  if (grid.extent0 >= kInt32Limit || grid.extent1 >= kInt32Limit) return false;
  for (const auto& h : halfspaces) {
    if (magnitude(h.offset) >= kExactLimit || h.column >= kExactLimit) return false;
    if (h.prefix0 >= kExactLimit / std::max<std::int64_t>(grid.extent0, 1)) return false;
    if (h.prefix1 >= kExactLimit / std::max<std::int64_t>(grid.extent1, 1)) return false;
  }
  return true;
}

void halfspace_heights(std::span<const ColumnHalfspace> halfspaces, const ColumnGrid& grid,
                       std::span<std::int64_t> out) {
  const __m256d lane_offsets = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d zero = _mm256_setzero_pd();
  const double zcap = static_cast<double>(grid.zcap);
  alignas(32) double lanes[4];
  alignas(32) double ok[4];

  for (std::int64_t p0 = 0; p0 < grid.extent0; ++p0) {
    std::int64_t* row = out.data() + p0 * grid.extent1;
    const double p0d = static_cast<double>(p0);
    std::int64_t p1 = 0;
    for (; p1 + 4 <= grid.extent1; p1 += 4) {
      const __m256d p1v = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(p1)), lane_offsets);
      __m256d z = zero;
      __m256d feasible = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
      for (const auto& h : halfspaces) {
        // rest = offset - prefix0*p0 - prefix1*p1
        const double base = static_cast<double>(h.offset) - static_cast<double>(h.prefix0) * p0d;
        const __m256d rest =
            _mm256_sub_pd(_mm256_set1_pd(base), _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(h.prefix1)), p1v));
        if (h.column == 0) {
          feasible = _mm256_and_pd(feasible, _mm256_cmp_pd(rest, zero, _CMP_LE_OQ));
        } else {
          const __m256d q = _mm256_ceil_pd(_mm256_div_pd(rest, _mm256_set1_pd(static_cast<double>(h.column))));
          z = _mm256_max_pd(z, q);
        }
      }
      feasible = _mm256_and_pd(feasible, _mm256_cmp_pd(z, _mm256_set1_pd(zcap), _CMP_LE_OQ));
      _mm256_store_pd(lanes, z);
      _mm256_store_pd(ok, feasible);
      for (int k = 0; k < 4; ++k) {
        std::uint64_t bits;
        std::memcpy(&bits, &ok[k], sizeof bits);
        row[p1 + k] = bits != 0 ? static_cast<std::int64_t>(lanes[k]) : kNoHeight;
      }
    }
    if (p1 < grid.extent1) {
      // Tail columns go through the scalar kernel on a one-row sub-grid.
      std::vector<ColumnHalfspace> shifted(halfspaces.begin(), halfspaces.end());
      for (auto& h : shifted) h.offset -= h.prefix0 * p0 + h.prefix1 * p1;
      const ColumnGrid tail{1, grid.extent1 - p1, grid.zcap};
      scalar::halfspace_heights(shifted, tail, std::span<std::int64_t>(row + p1, static_cast<std::size_t>(tail.extent1)));
    }
  }
}

bool count_outside_in_range(std::span<const Point3> generators, const Point3& box) {
  for (std::int64_t b : box) {
    if (b >= kInt32Limit) return false;
  }
  for (const auto& g : generators) {
    for (std::int64_t c : g) {
      if (c >= kInt32Limit) return false;
    }
  }
  return true;
}

std::int64_t count_outside(std::span<const Point3> generators, const Point3& box) {
  // Structure-of-arrays copy padded to a multiple of 8 with generators that
  // never divide anything inside the box.
  const std::size_t padded = (generators.size() + 7) / 8 * 8;
  std::vector<std::int32_t> g0(padded, INT32_MAX), g1(padded, INT32_MAX),
      g2(padded, INT32_MAX);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    g0[i] = static_cast<std::int32_t>(generators[i][0]);
    g1[i] = static_cast<std::int32_t>(generators[i][1]);
    g2[i] = static_cast<std::int32_t>(generators[i][2]);
  }

  std::int64_t outside = 0;
  for (std::int32_t v0 = 0; v0 < box[0]; ++v0) {
    const __m256i a = _mm256_set1_epi32(v0);
    for (std::int32_t v1 = 0; v1 < box[1]; ++v1) {
      const __m256i b = _mm256_set1_epi32(v1);
      for (std::int32_t v2 = 0; v2 < box[2]; ++v2) {
        const __m256i c = _mm256_set1_epi32(v2);
        bool inside = false;
        for (std::size_t i = 0; i < padded; i += 8) {
          const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g0.data() + i));
          const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g1.data() + i));
          const __m256i z = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g2.data() + i));
          // A lane misses when any generator coordinate exceeds the point.
          const __m256i miss = _mm256_or_si256(_mm256_or_si256(_mm256_cmpgt_epi32(x, a), _mm256_cmpgt_epi32(y, b)),
                                               _mm256_cmpgt_epi32(z, c));
          if (_mm256_movemask_epi8(miss) != -1) {
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

}  // namespace mrees::kernels::avx2
