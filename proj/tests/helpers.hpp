#pragma once

#include <random>
#include <string>
#include <vector>

#include "mrees/cli.hpp"
#include "mrees/corpus.hpp"
#include "oracle.hpp"

namespace testing {

inline const mrees::RingContext& R3() {
  static const mrees::RingContext ring = mrees::RingContext::standard(3);
  return ring;
}

inline mrees::MonomialIdeal ideal(const std::string& text, const mrees::RingContext& ring = R3()) {
  return mrees::cli::parse_and_evaluate(text, ring);
}

inline mrees::ExponentVector mono(const std::string& text, const mrees::RingContext& ring = R3()) {
  return mrees::cli::parse_monomial(text, ring);
}

/// Random ideal with 1..max_gens generators, entries in [0, max_exp]; not
/// necessarily m-primary.
inline mrees::MonomialIdeal random_ideal(std::mt19937_64& rng, const mrees::RingContext& ring, int max_gens,
                                         mrees::Exponent max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<mrees::Exponent> entry(0, max_exp);
  std::vector<mrees::ExponentVector> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::array<mrees::Exponent, 3> e{entry(rng), entry(rng), entry(rng)};
    gens.emplace_back(std::span<const mrees::Exponent>(e.data(), static_cast<std::size_t>(ring.dimension())));
  }
  return mrees::minimalize(ring, gens);
}

inline oracle::V as_v(const mrees::ExponentVector& v) {
  return {static_cast<long>(v.padded()[0]), static_cast<long>(v.padded()[1]), static_cast<long>(v.padded()[2])};
}

inline mrees::ExponentVector as_ev(const oracle::V& v, int d) {
  std::array<mrees::Exponent, 3> e{v[0], v[1], v[2]};
  return mrees::ExponentVector(std::span<const mrees::Exponent>(e.data(), static_cast<std::size_t>(d)));
}

/// Every lattice point of [0,box] in dimension d.
inline std::vector<oracle::V> box_points(const oracle::V& box, int d) {
  std::vector<oracle::V> out;
  const long e1 = d >= 2 ? box[1] : 0, e2 = d >= 3 ? box[2] : 0;
  for (long i = 0; i <= box[0]; ++i) {
    for (long j = 0; j <= e1; ++j) {
      for (long k = 0; k <= e2; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

}  // namespace testing
