#pragma once

// Seeded random m-primary monomial ideals and admissible joint-reduction
// triples drawn from them.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mrees/joint_reduction.hpp"

namespace mrees {

/// Pure powers of every variable with exponents in [1, max_exponent], plus up
/// to three further monomials with entries in [0, max_exponent].
MonomialIdeal random_m_primary(std::mt19937_64& rng, const RingContext& ring, Exponent max_exponent);
std::vector<MonomialIdeal> random_m_primary_ideals(std::uint64_t seed, std::size_t count, const RingContext& ring,
                                                   Exponent max_exponent);

/// The first (in permutation order) triple of minimal pure-power generators
/// a in I, b in J, c in K in distinct variables that passes check_good_jr up to
/// bound. Only such triples generate an m-primary ideal (a, b, c).
std::optional<JrTriple> find_good_monomial_jr(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K,
                                              Exponent bound);

struct CorpusEntry {
  std::size_t sample = 0;  ///< index of the sampled triple that produced it
  JrTriple triple;
};

struct Corpus {
  std::vector<CorpusEntry> admissible;
  std::size_t sampled = 0;  ///< triples drawn, including skipped ones
};

/// Samples triples of random m-primary ideals in k[x,y,z] until `want`
/// admissible ones are found or `max_samples` triples were drawn.
Corpus admissible_corpus(std::uint64_t seed, std::size_t want, Exponent max_exponent, Exponent bound,
                         std::size_t max_samples);

}  // namespace mrees
