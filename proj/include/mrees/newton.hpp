#pragma once

// Newton polyhedra and integral closures of monomial ideals.
//
// NP(I) = conv(exponents of I) + R^d_{>=0}. A monomial x^v lies in the
// integral closure of I exactly when v is in NP(I), so closures are computed
// by enumerating lattice points against an H-representation.

#include <span>
#include <vector>

#include "mrees/monomial.hpp"
#include "mrees/report.hpp"

namespace mrees {

/// normal · v >= offset.
struct Facet {
  ExponentVector normal;
  Exponent offset = 0;

  friend auto operator<=>(const Facet&, const Facet&) = default;
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct NewtonPolyhedron {
  RingContext ring;
  std::vector<Facet> facets;   ///< primitive nonnegative normals, sorted, no duplicates
  ExponentVector source_box;   ///< componentwise max of the defining generators
};

/// H-representation by candidate-hyperplane enumeration. Throws
/// ZeroIdealError for the zero ideal.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

bool np_contains(const NewtonPolyhedron& np, const ExponentVector& v);

/// All lattice points of {v >= 0 : normal·v >= offset for every facet},
/// as a canonical ideal. Minimal generators are searched in [0, box].
MonomialIdeal lattice_closure(const RingContext& ring, std::span<const Facet> facets, const ExponentVector& box);

MonomialIdeal integral_closure(const MonomialIdeal& ideal);
bool is_complete(const MonomialIdeal& ideal);

/// Whether I^n is complete for 1 <= n <= bound. On failure the report holds
/// the least failing n and a monomial of closure(I^n) \ I^n.
CheckReport is_normal_up_to(const MonomialIdeal& ideal, Exponent bound);

/// Closures of I_1^{n_1} ... I_k^{n_k} for a fixed tuple of ideals.
///
/// The facet normals of NP(I_1 ... I_k) describe every polyhedron
/// n_1 NP(I_1) + ... + n_k NP(I_k) (their normal fans coarsen that of the
/// full sum), so one facet computation serves the whole filtration: the
/// offset for normal u is sum_i n_i * min_{g in I_i} u·g.
class ProductClosure {
 public:
  explicit ProductClosure(std::vector<MonomialIdeal> ideals);

  const RingContext& ring() const { return ring_; }
  std::size_t arity() const { return ideals_.size(); }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  const std::vector<ExponentVector>& normals() const { return normals_; }

  /// Closure of the product with the given exponents (one per ideal).
  MonomialIdeal closure(std::span<const Exponent> exponents) const;

 private:
  RingContext ring_;
  std::vector<MonomialIdeal> ideals_;
  std::vector<ExponentVector> normals_;
  std::vector<std::vector<Exponent>> support_;  // support_[i][f] = min_{g in I_i} normals_[f]·g
  std::vector<ExponentVector> boxes_;
};

}  // namespace mrees
