#pragma once

// Bounded verification of monomial joint reductions (a, b, c) of the normal
// filtration F(r,s,t) = closure(I^r J^s K^t), and the length bookkeeping of
// the graded Kirby-Mehran complex built from (a^r, b^s, c^t).
//
// Every "for all n" statement is checked on a finite range and reported as
// verified up to that range.

#include <optional>
#include <string>
#include <vector>

#include "mrees/hilbert.hpp"
#include "mrees/report.hpp"

namespace mrees {

/// Monomials a in I, b in J, c in K. The constructor checks membership.
struct JrTriple {
  JrTriple(MonomialIdeal I, MonomialIdeal J, MonomialIdeal K, ExponentVector a, ExponentVector b, ExponentVector c);

  MonomialIdeal I, J, K;
  ExponentVector a, b, c;

  const ExponentVector& element(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
  const MonomialIdeal& host(int i) const { return i == 0 ? I : (i == 1 ? J : K); }
  std::vector<MonomialIdeal> hosts() const { return {I, J, K}; }
};

enum class JrKind { JointReductionZero, GoodJr, Strictness };
const char* jr_kind_name(JrKind kind);

struct JrFailure {
  std::vector<Exponent> point;
  ExponentVector witness;  ///< in the left side of the failed identity, not in the right
  std::string detail;
};

struct JrReport {
  JrKind kind = JrKind::JointReductionZero;
  Exponent bound = 0;
  bool passed = true;
  std::optional<JrFailure> first_failure;
};

/// closure(r,s,t) = a closure(r-1,s,t) + b closure(r,s-1,t) + c closure(r,s,t-1)
/// for 1 <= r,s,t <= bound.
JrReport check_jrn_zero(const JrTriple& t, Exponent bound, FiltrationCache& cache);
JrReport check_jrn_zero(const JrTriple& t, Exponent bound);

/// (a_i : i in A) ∩ closure(n) = sum_{i in A} a_i closure(n - e_i) for every
/// proper nonempty A and n in [0,bound]^3 with n_i >= 1 for i in A.
JrReport check_good_jr(const JrTriple& t, Exponent bound, FiltrationCache& cache);
JrReport check_good_jr(const JrTriple& t, Exponent bound);

/// (a^m, b^n) ∩ closure(r,s,t) = a^m closure(r-m,s,t) + b^n closure(r,s-n,t),
/// together with (a^m) ∩ closure(r,s,t) = a^m closure(r-m,s,t) and the
/// analogous statement for b^n. Needs 1 <= m <= r and 1 <= n <= s.
CheckReport powers_identity_check(const JrTriple& t, Exponent m, Exponent n, const Grade& point,
                                  FiltrationCache& cache);

struct KmLengths {
  Grade point{0, 0, 0};
  Exponent h0 = 0;
  Exponent h1 = 0;
  Exponent h2 = 0;
};

/// h0 = lambda(R / ((a^r,b^s,c^t) + closure(r,s,t))) and h1 from the
/// quotient (closure(r,s,t) ∩ (a^r,b^s,c^t)) / (a^r F(0,s,t) + b^s F(r,0,t) +
/// c^t F(r,s,0)). h2 comes from the graded strands of the complex and must
/// vanish; anything else raises InvariantViolation.
KmLengths km_lengths(const JrTriple& t, const Grade& point, FiltrationCache& cache);
KmLengths km_lengths(const JrTriple& t, const Grade& point);

/// Homology lengths of the complex computed degree by degree over N^3: in
/// each multidegree the three terms are vector spaces of dimension <= 3 with
/// maps given by multiplication by a^r, b^s, c^t.
KmLengths km_graded_homology(const JrTriple& t, const Grade& point, FiltrationCache& cache);

/// lambda((a^r,b^s,c^t) / denominator) against
/// [F(r,s,0) + F(r,0,t) + F(0,s,t)] - [F(r,0,0) + F(0,s,0) + F(0,0,t)]
/// in colengths. Throws PreconditionError unless r,s,t >= 1.
CheckReport length_identity_check(const JrTriple& t, const Grade& point, FiltrationCache& cache);

/// Euler characteristic of the complex: lambda(C2) - lambda(C1) + lambda(C0) = h0 - h1 + h2.
CheckReport euler_identity_check(const JrTriple& t, const Grade& point, FiltrationCache& cache);

/// lambda(closure(r,s,t) / (a^r F(0,s,t) + b^s F(r,0,t) + c^t F(r,s,0))).
Exponent s_length(const JrTriple& t, const Grade& point, FiltrationCache& cache);
Exponent s_length(const JrTriple& t, const Grade& point);

struct LcOrigin {
  Exponent value = 0;
  Exponent stable_k = 0;
  std::vector<Exponent> sequence;  ///< S(k,k,k) for k = 1..stable_k+1
};

/// First value of S(k,k,k), k = 1, 2, ..., repeated at consecutive k.
/// Raises InvariantViolation if the sequence ever decreases and
/// NoStabilization if nothing repeats by max_k.
LcOrigin lc_origin_length(const JrTriple& t, Exponent max_k, FiltrationCache& cache);
LcOrigin lc_origin_length(const JrTriple& t, Exponent max_k);

/// Largest n <= bound with closure(I^n) != Kred closure(I^{n-1}); nullopt
/// when equality fails at n = bound (the defining equality has not settled).
/// Throws ContainmentViolation unless Kred ⊆ I.
std::optional<Exponent> normal_reduction_number(const MonomialIdeal& I, const MonomialIdeal& kred, Exponent bound);

/// Strictness of the complete reduction given by a 3x3 matrix of monomials
/// x[i][j] in I_i: with y_j = prod_i x[i][j],
/// (y_1..y_j) ∩ F(n) = (y_1..y_j) F(n - e) for j = 1, 2 and n in [j, bound]^3.
JrReport check_strict_complete_reduction(const std::array<std::array<ExponentVector, 3>, 3>& x, Exponent bound,
                                         FiltrationCache& cache);

/// lambda(A / B) for monomial ideals B ⊆ A with B m-primary. Throws
/// ContainmentViolation when B ⊄ A.
Exponent quotient_length(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace mrees
