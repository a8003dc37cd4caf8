#pragma once

// End-to-end checks tying normal Hilbert coefficients of I, J, K and their
// products to joint-reduction behavior in three variables.

#include <map>
#include <string>

#include "mrees/joint_reduction.hpp"

namespace mrees {

/// e3 of I, J, K, IJ, IK, JK, IJK and their alternating sum
///   e3(IJK) - e3(IJ) - e3(IK) - e3(JK) + e3(I) + e3(J) + e3(K).
struct CriterionValues {
  std::map<std::string, std::int64_t> e3;
  std::int64_t sum = 0;
};

CriterionValues criterion_values(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K);
std::int64_t criterion_sum(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K);

struct CriterionReport {
  std::map<std::string, std::int64_t> e3_values;
  std::int64_t criterion_sum = 0;
  JrReport jrn_zero;                ///< joint reduction number zero, checked up to the bound
  Exponent jrn_zero_verified_to = 0;  ///< bound when it passed, 0 otherwise
  Exponent lc_origin = 0;
  Exponent lc_stable_k = 0;
  bool consistent = false;
  std::vector<std::string> notes;
};

/// Computes the three verdicts (criterion sum zero, jrn-zero up to bound,
/// stabilized origin length zero) without judging them. Throws
/// PreconditionError unless (a, b, c) is m-primary and the triple is a good
/// joint reduction up to bound.
CriterionReport evaluate_equivalences(const JrTriple& t, Exponent bound, FiltrationCache& cache);
CriterionReport evaluate_equivalences(const JrTriple& t, Exponent bound);
/// As evaluate_equivalences, and raises InvariantViolation with the full
/// report text when the verdicts disagree or lc_origin differs from the
/// criterion sum.
CriterionReport verify_equivalences(const JrTriple& t, Exponent bound);
std::string describe(const CriterionReport& report);

/// Arity-3, arity-2 and arity-1 stabilized fits of a triple.
struct TripleFits {
  HilbertPoly ijk;
  HilbertPoly ij, ik, jk;
  HilbertPoly i, j, k;
};
TripleFits fit_triple(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K);

/// e_(2,0,0) = e_1(I), e_(1,1,0) = e_(1,1)(I,J) and their permutations, plus
/// the degree-3 agreements e_(3,0,0) = e_(3,0)(I,J) = e_(3,0)(I,K) = e_0(I),
/// e_(2,1,0) = e_(2,1)(I,J), e_(1,2,0) = e_(1,2)(I,J) and permutations.
CheckReport mixed_coefficient_relations(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K);
CheckReport mixed_coefficient_relations(const TripleFits& fits);

/// The r, s, t coefficients of the origin-length polynomial vanish, S is
/// constant on [1,bound]^3 with value equal to the criterion sum, and
/// S(r,s,t) = r Lr + s Ls + t Lt + criterion sum on that range.
CheckReport linear_coefficients_vanish(const JrTriple& t, Exponent bound);

struct ProductVerdict {
  std::vector<Exponent> exponents;
  bool complete = true;
  std::optional<ExponentVector> witness;  ///< in the closure, not in the product
};

struct VitulliReport {
  int arity = 1;
  Exponent bound = 0;
  std::vector<ProductVerdict> hypothesis;  ///< every product with total exponent <= 2
  bool hypothesis_holds = true;
  std::optional<ProductVerdict> first_incomplete;
  bool phase2_ran = false;
  CheckReport phase2;  ///< completeness of every product with max exponent <= bound
  /// False only when the hypothesis holds and some product is incomplete.
  bool consistent() const { return !hypothesis_holds || phase2.passed; }
};

/// Completeness of all products of 1-3 m-primary ideals with total exponent
/// <= 2 implies completeness of every product; checks both halves.
VitulliReport vitulli_check(const std::vector<MonomialIdeal>& ideals, Exponent bound);

}  // namespace mrees
