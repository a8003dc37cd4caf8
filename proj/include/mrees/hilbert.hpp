#pragma once

// Colengths, normal Hilbert functions of ideal tuples, and exact fitting of
// their Hilbert polynomials.
//
// A HilbertPoly of arity a stores integers e_i for multi-indices i with
// |i| <= 3 (entries past the arity are zero) and evaluates
//
//   P(n) = sum_i (-1)^(3 - |i|) e_i * prod_k C(n_k + i_k - 1, i_k),
//
// so for arity 1, (e_(3), e_(2), e_(1), e_(0)) = (e0, e1, e2, e3) in
//   P(n) = e0 C(n+2,3) - e1 C(n+1,2) + e2 n - e3.

#include <array>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mrees/newton.hpp"
#include "mrees/report.hpp"

namespace mrees {

/// Number of points of [0,a_1) x ... outside I. Throws NotMPrimary.
/// Computed from the staircase: for each prefix column, the least last
/// coordinate present in I.
Exponent colength(const MonomialIdeal& ideal);
/// Same value by a dense scan of the whole box.
Exponent colength_dense(const MonomialIdeal& ideal);

using Grade = std::array<Exponent, 3>;  // exponents (r,s,t); unused slots are 0

enum class FiltrationKind {
  Normal,  ///< n -> closure(I_1^{n_1} ... )
  Adic,    ///< n -> I_1^{n_1} ... with no closure
};

struct FiltrationEntry {
  MonomialIdeal ideal;
  Exponent colength = 0;
};

/// Memo table n -> (filtration ideal, colength) for a tuple of 1-3 ideals.
/// Not thread-safe; confine an instance to one thread.
class FiltrationCache {
 public:
  explicit FiltrationCache(std::vector<MonomialIdeal> ideals, FiltrationKind kind = FiltrationKind::Normal);

  int arity() const { return static_cast<int>(ideals_.size()); }
  FiltrationKind kind() const { return kind_; }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  const RingContext& ring() const { return ideals_.front().ring(); }

  /// n has arity() entries, all >= 0.
  const FiltrationEntry& entry(std::span<const Exponent> n);
  const FiltrationEntry& entry(std::initializer_list<Exponent> n) {
    return entry(std::span<const Exponent>(n.begin(), n.size()));
  }
  Exponent colength_at(std::span<const Exponent> n) { return entry(n).colength; }

  /// Identifies the ideal tuple and kind; used to match persisted records.
  std::string key() const;

  std::size_t size() const { return table_.size(); }
  const std::map<Grade, FiltrationEntry>& table() const { return table_; }
  /// Stores an externally supplied entry (a persisted record). Returns false
  /// and leaves the table unchanged when the record's colength disagrees with
  /// its ideal or its grade has the wrong shape.
  bool adopt(const Grade& n, FiltrationEntry entry);
  /// Grades computed here, not adopted, in the order they were computed.
  const std::vector<Grade>& computed() const { return computed_; }

 private:
  Grade grade(std::span<const Exponent> n) const;

  std::vector<MonomialIdeal> ideals_;
  FiltrationKind kind_;
  std::optional<ProductClosure> closure_;
  std::vector<PowerCache> powers_;
  std::map<Grade, FiltrationEntry> table_;
  std::vector<Grade> computed_;
};

/// lambda(R / closure(I^{n_1} J^{n_2} K^{n_3})), memoized in the cache.
Exponent normal_colength(FiltrationCache& cache, std::span<const Exponent> n);

using MultiIndex = std::array<int, 3>;

class HilbertPoly {
 public:
  HilbertPoly() = default;
  HilbertPoly(int arity, std::map<MultiIndex, std::int64_t> coeffs);

  int arity() const { return arity_; }
  static constexpr int degree() { return 3; }
  const std::map<MultiIndex, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coefficient(const MultiIndex& i) const;
  std::int64_t value(std::span<const Exponent> n) const;
  std::int64_t value(std::initializer_list<Exponent> n) const {
    return value(std::span<const Exponent>(n.begin(), n.size()));
  }
  /// (e0, e1, e2, e3) of an arity-1 polynomial.
  std::array<std::int64_t, 4> univariate() const;

  /// Offset at which a stabilized fit settled; -1 for a plain fit.
  int stable_offset = -1;

  /// Equal coefficient maps (the offset is ignored).
  friend bool operator==(const HilbertPoly& a, const HilbertPoly& b) {
    return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int arity_ = 1;
  std::map<MultiIndex, std::int64_t> coeffs_;  // every multi-index of the arity, zeros included
};

/// Multi-indices of the given arity with |i| <= 3, in increasing order.
std::vector<MultiIndex> basis_indices(int arity);
/// prod_k C(n_k + i_k - 1, i_k).
std::int64_t basis_value(const MultiIndex& i, std::span<const Exponent> n);

/// Exact fit on the simplex grid shifted by `offset`, validated on
/// [offset, offset+5]^arity. Throws PostulationFailure on a non-integral
/// solution or a validation mismatch.
HilbertPoly fit(FiltrationCache& cache, int arity, Exponent offset);

/// Fits at offsets 0, 1, ... until two consecutive fits agree; the result
/// carries the first stable offset. Throws NoStabilization past offset 8.
HilbertPoly stabilized_fit(FiltrationCache& cache, int arity);

/// P(n) == H(n) on [0, box]^arity, with P the stabilized fit of the cache.
CheckReport postulation_check(FiltrationCache& cache, int arity, Exponent box);
/// The same comparison against a given polynomial, e.g. the normal Hilbert
/// polynomial against the adic Hilbert function.
CheckReport postulation_check(const HilbertPoly& poly, FiltrationCache& cache, Exponent box);

/// e3 of the product of the ideals, from the stabilized arity-1 fit of its
/// normal filtration.
std::int64_t e3_of_product(const std::vector<MonomialIdeal>& ideals);

}  // namespace mrees
