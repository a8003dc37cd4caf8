#include "mrees/corpus.hpp"

#include <algorithm>
#include <array>

namespace mrees {

MonomialIdeal random_m_primary(std::mt19937_64& rng, const RingContext& ring, Exponent max_exponent) {
  if (max_exponent < 1) throw PreconditionError("max_exponent must be positive");
  const int d = ring.dimension();
  std::uniform_int_distribution<Exponent> pure(1, max_exponent);
  std::uniform_int_distribution<Exponent> entry(0, max_exponent);
  std::uniform_int_distribution<int> extras(0, 3);
  std::vector<ExponentVector> gens;
  for (int i = 0; i < d; ++i) gens.push_back(ExponentVector::pure_power(d, i, pure(rng)));
  const int n = extras(rng);
  for (int k = 0; k < n; ++k) {
    std::array<Exponent, 3> v{0, 0, 0};
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = entry(rng);
    const ExponentVector g(std::span<const Exponent>(v.data(), static_cast<std::size_t>(d)));
    if (g != ExponentVector::zero(d)) gens.push_back(g);
  }
  return minimalize(ring, gens);
}

std::vector<MonomialIdeal> random_m_primary_ideals(std::uint64_t seed, std::size_t count, const RingContext& ring,
                                                   Exponent max_exponent) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_m_primary(rng, ring, max_exponent));
  return out;
}

std::optional<JrTriple> find_good_monomial_jr(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K,
                                              Exponent bound) {
  if (I.dimension() != 3) throw PreconditionError("joint reductions are searched in three variables");
  const ExponentVector pi = *pure_power_bounds(I);
  const ExponentVector pj = *pure_power_bounds(J);
  const ExponentVector pk = *pure_power_bounds(K);
  FiltrationCache cache({I, J, K});
  std::array<int, 3> perm{0, 1, 2};
  do {
    JrTriple t(I, J, K, ExponentVector::pure_power(3, perm[0], pi[perm[0]]),
               ExponentVector::pure_power(3, perm[1], pj[perm[1]]), ExponentVector::pure_power(3, perm[2], pk[perm[2]]));
    if (check_good_jr(t, bound, cache).passed) return t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Corpus admissible_corpus(std::uint64_t seed, std::size_t want, Exponent max_exponent, Exponent bound,
                         std::size_t max_samples) {
  const RingContext ring = RingContext::standard(3);
  std::mt19937_64 rng(seed);
  Corpus corpus;
  while (corpus.admissible.size() < want && corpus.sampled < max_samples) {
    const MonomialIdeal I = random_m_primary(rng, ring, max_exponent);
    const MonomialIdeal J = random_m_primary(rng, ring, max_exponent);
    const MonomialIdeal K = random_m_primary(rng, ring, max_exponent);
    const std::size_t index = corpus.sampled++;
    if (auto t = find_good_monomial_jr(I, J, K, bound)) corpus.admissible.push_back({index, std::move(*t)});
  }
  return corpus;
}

}  // namespace mrees
