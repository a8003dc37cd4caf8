#include "mrees/joint_reduction.hpp"

#include "mrees/exact.hpp"

namespace mrees {

namespace {

void require_cache(const JrTriple& t, const FiltrationCache& cache) {
  if (cache.kind() != FiltrationKind::Normal || cache.arity() != 3 || cache.ideals()[0] != t.I ||
      cache.ideals()[1] != t.J || cache.ideals()[2] != t.K) {
    throw PreconditionError("filtration cache does not belong to the triple's host ideals");
  }
}

void require_positive(const Grade& p, const char* what) {
  if (p[0] < 1 || p[1] < 1 || p[2] < 1) {
    throw PreconditionError(std::string(what) + " needs r, s, t >= 1");
  }
}

const MonomialIdeal& F(FiltrationCache& cache, Exponent r, Exponent s, Exponent t) {
  return cache.entry({r, s, t}).ideal;
}

std::vector<Exponent> as_point(const Grade& g) { return {g[0], g[1], g[2]}; }

// (a^r, b^s, c^t)
MonomialIdeal power_ideal(const JrTriple& t, const Grade& p) {
  return minimalize(t.I.ring(), {p[0] * t.a, p[1] * t.b, p[2] * t.c});
}

// a^r F(0,s,t) + b^s F(r,0,t) + c^t F(r,s,0)
MonomialIdeal km_denominator(const JrTriple& t, const Grade& p, FiltrationCache& cache) {
  const auto [r, s, u] = p;
  MonomialIdeal d = scale(F(cache, 0, s, u), r * t.a);
  d = add(d, scale(F(cache, r, 0, u), s * t.b));
  return add(d, scale(F(cache, r, s, 0), u * t.c));
}

ExponentVector witness_between(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  if (auto w = generator_not_in(lhs, rhs)) return *w;
  return *generator_not_in(rhs, lhs);
}

std::string subset_text(int mask) {
  std::string s = "{";
  for (int i = 0; i < 3; ++i) {
    if (mask & (1 << i)) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  }
  return s + "}";
}

// Pairwise and single colength sums of the complex's outer terms.
struct OuterLengths {
  Exponent pairwise = 0;
  Exponent single = 0;
};

OuterLengths outer_lengths(const Grade& p, FiltrationCache& cache) {
  const auto [r, s, u] = p;
  OuterLengths o;
  o.pairwise = cache.entry({r, s, 0}).colength + cache.entry({r, 0, u}).colength + cache.entry({0, s, u}).colength;
  o.single = cache.entry({r, 0, 0}).colength + cache.entry({0, s, 0}).colength + cache.entry({0, 0, u}).colength;
  return o;
}

}  // namespace

JrTriple::JrTriple(MonomialIdeal I_, MonomialIdeal J_, MonomialIdeal K_, ExponentVector a_, ExponentVector b_,
                   ExponentVector c_)
    : I(std::move(I_)), J(std::move(J_)), K(std::move(K_)), a(a_), b(b_), c(c_) {
  if (!(I.ring() == J.ring()) || !(I.ring() == K.ring())) throw DimensionMismatch("host ideals live in different rings");
  static constexpr const char* kNames[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) {
    if (!contains_monomial(host(i), element(i))) {
      throw PreconditionError(std::string(kNames[i]) + " = " + format_monomial(element(i), I.ring()) +
                              " is not in its host ideal " + format_ideal(host(i)));
    }
  }
}

const char* jr_kind_name(JrKind kind) {
  switch (kind) {
    case JrKind::JointReductionZero:
      return "joint-reduction-zero";
    case JrKind::GoodJr:
      return "good-jr";
    case JrKind::Strictness:
      return "strictness";
  }
  return "?";
}

JrReport check_jrn_zero(const JrTriple& t, Exponent bound, FiltrationCache& cache) {
  require_cache(t, cache);
  if (bound < 1) throw PreconditionError("bound must be positive");
  JrReport report{JrKind::JointReductionZero, bound, true, std::nullopt};
  for (Exponent r = 1; r <= bound; ++r) {
    for (Exponent s = 1; s <= bound; ++s) {
      for (Exponent u = 1; u <= bound; ++u) {
        const MonomialIdeal& lhs = F(cache, r, s, u);
        MonomialIdeal rhs = scale(F(cache, r - 1, s, u), t.a);
        rhs = add(rhs, scale(F(cache, r, s - 1, u), t.b));
        rhs = add(rhs, scale(F(cache, r, s, u - 1), t.c));
        if (lhs != rhs) {
          report.passed = false;
          report.first_failure = JrFailure{{r, s, u}, witness_between(lhs, rhs), "F(n) != aF(n-e1)+bF(n-e2)+cF(n-e3)"};
          return report;
        }
      }
    }
  }
  return report;
}

JrReport check_jrn_zero(const JrTriple& t, Exponent bound) {
  FiltrationCache cache(t.hosts());
  return check_jrn_zero(t, bound, cache);
}

JrReport check_good_jr(const JrTriple& t, Exponent bound, FiltrationCache& cache) {
  require_cache(t, cache);
  if (bound < 1) throw PreconditionError("bound must be positive");
  JrReport report{JrKind::GoodJr, bound, true, std::nullopt};
  const RingContext& ring = t.I.ring();
  for (Exponent r = 0; r <= bound; ++r) {
    for (Exponent s = 0; s <= bound; ++s) {
      for (Exponent u = 0; u <= bound; ++u) {
        const Grade n{r, s, u};
        for (int mask = 1; mask < 7; ++mask) {
          bool in_range = true;
          std::vector<ExponentVector> elems;
          for (int i = 0; i < 3; ++i) {
            if (!(mask & (1 << i))) continue;
            in_range &= n[static_cast<std::size_t>(i)] >= 1;
            elems.push_back(t.element(i));
          }
          if (!in_range) continue;
          const MonomialIdeal lhs = intersect(minimalize(ring, elems), F(cache, r, s, u));
          MonomialIdeal rhs = MonomialIdeal::zero(ring);
          for (int i = 0; i < 3; ++i) {
            if (!(mask & (1 << i))) continue;
            Grade m = n;
            --m[static_cast<std::size_t>(i)];
            rhs = add(rhs, scale(F(cache, m[0], m[1], m[2]), t.element(i)));
          }
          if (lhs != rhs) {
            report.passed = false;
            report.first_failure =
                JrFailure{as_point(n), witness_between(lhs, rhs), "subset " + subset_text(mask) + " identity fails"};
            return report;
          }
        }
      }
    }
  }
  return report;
}

JrReport check_good_jr(const JrTriple& t, Exponent bound) {
  FiltrationCache cache(t.hosts());
  return check_good_jr(t, bound, cache);
}

CheckReport powers_identity_check(const JrTriple& t, Exponent m, Exponent n, const Grade& point,
                                  FiltrationCache& cache) {
  require_cache(t, cache);
  const auto [r, s, u] = point;
  if (m < 1 || n < 1 || m > r || n > s || u < 0) throw PreconditionError("powers identity needs 1 <= m <= r, 1 <= n <= s");
  CheckReport report;
  report.check = "powers-identity";
  report.bound = std::max({r, s, u});
  const RingContext& ring = t.I.ring();
  const ExponentVector am = m * t.a;
  const ExponentVector bn = n * t.b;
  const MonomialIdeal& full = F(cache, r, s, u);
  const MonomialIdeal a_part = scale(F(cache, r - m, s, u), am);
  const MonomialIdeal b_part = scale(F(cache, r, s - n, u), bn);

  auto verify = [&](const std::string& label, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    if (lhs != rhs) report.fail({as_point(point), witness_between(lhs, rhs), label});
  };
  verify("(a^m,b^n) ∩ F(r,s,t)", intersect(minimalize(ring, {am, bn}), full), add(a_part, b_part));
  verify("(a^m) ∩ F(r,s,t)", intersect(MonomialIdeal::principal(ring, am), full), a_part);
  verify("(b^n) ∩ F(r,s,t)", intersect(MonomialIdeal::principal(ring, bn), full), b_part);
  return report;
}

Exponent quotient_length(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!is_subset(b, a)) {
    throw ContainmentViolation("denominator " + format_ideal(b) + " is not contained in " + format_ideal(a));
  }
  return colength(b) - colength(a);
}

KmLengths km_lengths(const JrTriple& t, const Grade& point, FiltrationCache& cache) {
  require_cache(t, cache);
  require_positive(point, "km_lengths");
  const MonomialIdeal powers = power_ideal(t, point);
  const MonomialIdeal& full = F(cache, point[0], point[1], point[2]);
  KmLengths out;
  out.point = point;
  out.h0 = colength(add(powers, full));
  out.h1 = quotient_length(intersect(full, powers), km_denominator(t, point, cache));
  out.h2 = km_graded_homology(t, point, cache).h2;
  if (out.h2 != 0) {
    throw InvariantViolation("H2 of the Kirby-Mehran complex has length " + std::to_string(out.h2) + " at (" +
                             std::to_string(point[0]) + "," + std::to_string(point[1]) + "," +
                             std::to_string(point[2]) + ")");
  }
  return out;
}

KmLengths km_lengths(const JrTriple& t, const Grade& point) {
  FiltrationCache cache(t.hosts());
  return km_lengths(t, point, cache);
}

KmLengths km_graded_homology(const JrTriple& t, const Grade& point, FiltrationCache& cache) {
  require_cache(t, cache);
  require_positive(point, "km_graded_homology");
  if (t.I.dimension() != 3) throw PreconditionError("the Kirby-Mehran complex is built in three variables");
  const auto [r, s, u] = point;
  const auto ta = (r * t.a).padded();
  const auto tb = (s * t.b).padded();
  const auto tc = (u * t.c).padded();
  auto sum = [](std::array<Exponent, 3> x, const std::array<Exponent, 3>& y) {
    for (int i = 0; i < 3; ++i) x[static_cast<std::size_t>(i)] = checked_add(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
    return x;
  };

  struct Term {
    const MonomialIdeal* quotient;
    std::array<Exponent, 3> shift;
  };
  // Index 0: R/F(r,s,t). 1-3: R/F(r,s,0)(-c^t), R/F(r,0,t)(-b^s), R/F(0,s,t)(-a^r).
  // 4-6: R/F(r,0,0)(-b^s c^t), R/F(0,s,0)(-a^r c^t), R/F(0,0,t)(-a^r b^s).
  const std::array<Term, 7> terms{{
      {&F(cache, r, s, u), {0, 0, 0}},
      {&F(cache, r, s, 0), tc},
      {&F(cache, r, 0, u), tb},
      {&F(cache, 0, s, u), ta},
      {&F(cache, r, 0, 0), sum(tb, tc)},
      {&F(cache, 0, s, 0), sum(ta, tc)},
      {&F(cache, 0, 0, u), sum(ta, tb)},
  }};
  // Maps from C0 (columns U, V, W) to C1 (rows A, B, C).
  static constexpr int kPhi1[3][3] = {{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}};

  std::array<Exponent, 3> box{0, 0, 0};
  for (const auto& term : terms) {
    const ExponentVector bounds = *pure_power_bounds(*term.quotient);
    for (int i = 0; i < 3; ++i) {
      box[static_cast<std::size_t>(i)] =
          std::max(box[static_cast<std::size_t>(i)], term.shift[static_cast<std::size_t>(i)] + bounds[i]);
    }
  }

  KmLengths out;
  out.point = point;
  std::array<bool, 7> present{};
  for (Exponent w0 = 0; w0 < box[0]; ++w0) {
    for (Exponent w1 = 0; w1 < box[1]; ++w1) {
      for (Exponent w2 = 0; w2 < box[2]; ++w2) {
        const std::array<Exponent, 3> w{w0, w1, w2};
        int count = 0;
        for (std::size_t k = 0; k < terms.size(); ++k) {
          const auto& sh = terms[k].shift;
          present[k] = false;
          if (w[0] < sh[0] || w[1] < sh[1] || w[2] < sh[2]) continue;
          const ExponentVector e{w[0] - sh[0], w[1] - sh[1], w[2] - sh[2]};
          present[k] = !contains_monomial(*terms[k].quotient, e);
          count += present[k];
        }
        if (count == 0) continue;
        const Exponent dim2 = present[0];
        const Exponent dim1 = present[1] + present[2] + present[3];
        const Exponent dim0 = present[4] + present[5] + present[6];
        const Exponent rank0 = (dim2 > 0 && dim1 > 0) ? 1 : 0;
        Exponent rank1 = 0;
        if (dim0 > 0 && dim1 > 0) {
          BigMatrix phi(3, std::vector<BigInt>(3));
          for (int row = 0; row < 3; ++row) {
            for (int col = 0; col < 3; ++col) {
              if (present[static_cast<std::size_t>(1 + row)] && present[static_cast<std::size_t>(4 + col)]) {
                phi[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = kPhi1[row][col];
              }
            }
          }
          rank1 = static_cast<Exponent>(exact_rank(std::move(phi)));
        }
        out.h0 += dim2 - rank0;
        out.h1 += dim1 - rank0 - rank1;
        out.h2 += dim0 - rank1;
      }
    }
  }
  return out;
}

CheckReport length_identity_check(const JrTriple& t, const Grade& point, FiltrationCache& cache) {
  require_cache(t, cache);
  require_positive(point, "length_identity_check");
  CheckReport report;
  report.check = "length-identity";
  report.bound = std::max({point[0], point[1], point[2]});
  const Exponent lhs = quotient_length(power_ideal(t, point), km_denominator(t, point, cache));
  const OuterLengths o = outer_lengths(point, cache);
  report.compare("lambda((a^r,b^s,c^t)/D) vs pairwise - single", lhs, o.pairwise - o.single);
  return report;
}

CheckReport euler_identity_check(const JrTriple& t, const Grade& point, FiltrationCache& cache) {
  require_cache(t, cache);
  require_positive(point, "euler_identity_check");
  CheckReport report;
  report.check = "euler-identity";
  report.bound = std::max({point[0], point[1], point[2]});
  const KmLengths iso = km_lengths(t, point, cache);
  const KmLengths graded = km_graded_homology(t, point, cache);
  const OuterLengths o = outer_lengths(point, cache);
  const Exponent chi = cache.entry({point[0], point[1], point[2]}).colength - o.pairwise + o.single;
  report.compare("lambda(C2) - lambda(C1) + lambda(C0) vs h0 - h1 + h2", chi, iso.h0 - iso.h1 + iso.h2);
  report.compare("h0 formula vs graded", iso.h0, graded.h0);
  report.compare("h1 formula vs graded", iso.h1, graded.h1);
  report.compare("h2", graded.h2, 0);
  return report;
}

Exponent s_length(const JrTriple& t, const Grade& point, FiltrationCache& cache) {
  require_cache(t, cache);
  require_positive(point, "s_length");
  return quotient_length(F(cache, point[0], point[1], point[2]), km_denominator(t, point, cache));
}

Exponent s_length(const JrTriple& t, const Grade& point) {
  FiltrationCache cache(t.hosts());
  return s_length(t, point, cache);
}

LcOrigin lc_origin_length(const JrTriple& t, Exponent max_k, FiltrationCache& cache) {
  if (max_k < 2) throw PreconditionError("lc_origin_length needs max_k >= 2 to observe a repeat");
  LcOrigin out;
  for (Exponent k = 1; k <= max_k; ++k) {
    out.sequence.push_back(s_length(t, {k, k, k}, cache));
    if (k == 1) continue;
    const Exponent prev = out.sequence[out.sequence.size() - 2];
    const Exponent cur = out.sequence.back();
    if (cur < prev) {
      throw InvariantViolation("S(k,k,k) decreased from " + std::to_string(prev) + " to " + std::to_string(cur) +
                               " at k = " + std::to_string(k));
    }
    if (cur == prev) {
      out.value = cur;
      out.stable_k = k - 1;
      return out;
    }
  }
  std::string table;
  for (std::size_t i = 0; i < out.sequence.size(); ++i) {
    table += " S(" + std::to_string(i + 1) + ")=" + std::to_string(out.sequence[i]);
  }
  throw NoStabilization("S(k,k,k) did not repeat by k = " + std::to_string(max_k) + ":" + table);
}

LcOrigin lc_origin_length(const JrTriple& t, Exponent max_k) {
  FiltrationCache cache(t.hosts());
  return lc_origin_length(t, max_k, cache);
}

std::optional<Exponent> normal_reduction_number(const MonomialIdeal& I, const MonomialIdeal& kred, Exponent bound) {
  if (bound < 1) throw PreconditionError("bound must be positive");
  if (!is_m_primary(I) || !is_m_primary(kred)) throw NotMPrimary("reduction number needs m-primary ideals");
  if (!is_subset(kred, I)) throw ContainmentViolation("candidate reduction " + format_ideal(kred) + " is not inside " + format_ideal(I));
  FiltrationCache cache({I});
  Exponent last_unequal = 0;
  bool settled = true;
  for (Exponent n = 1; n <= bound; ++n) {
    settled = cache.entry({n}).ideal == multiply(kred, cache.entry({n - 1}).ideal);
    if (!settled) last_unequal = n;
  }
  if (!settled) return std::nullopt;
  return last_unequal;
}

JrReport check_strict_complete_reduction(const std::array<std::array<ExponentVector, 3>, 3>& x, Exponent bound,
                                         FiltrationCache& cache) {
  if (cache.arity() != 3 || cache.kind() != FiltrationKind::Normal) {
    throw PreconditionError("strictness is checked on a normal filtration of three ideals");
  }
  if (bound < 1) throw PreconditionError("bound must be positive");
  const RingContext& ring = cache.ring();
  std::array<ExponentVector, 3> y;
  for (int j = 0; j < 3; ++j) {
    y[static_cast<std::size_t>(j)] = ExponentVector::zero(ring.dimension());
    for (int i = 0; i < 3; ++i) {
      const ExponentVector& entry = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!contains_monomial(cache.ideals()[static_cast<std::size_t>(i)], entry)) {
        throw PreconditionError("complete-reduction entry " + format_monomial(entry, ring) + " is not in ideal " +
                                std::to_string(i + 1));
      }
      y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)] + entry;
    }
  }
  JrReport report{JrKind::Strictness, bound, true, std::nullopt};
  for (int j = 1; j <= ring.dimension() - 1 && j <= 2; ++j) {
    const MonomialIdeal gens = minimalize(ring, std::span<const ExponentVector>(y.data(), static_cast<std::size_t>(j)));
    for (Exponent r = j; r <= bound; ++r) {
      for (Exponent s = j; s <= bound; ++s) {
        for (Exponent u = j; u <= bound; ++u) {
          const MonomialIdeal lhs = intersect(gens, F(cache, r, s, u));
          const MonomialIdeal rhs = multiply(gens, F(cache, r - 1, s - 1, u - 1));
          if (lhs != rhs) {
            report.passed = false;
            report.first_failure = JrFailure{{r, s, u}, witness_between(lhs, rhs),
                                             "(y_1..y_" + std::to_string(j) + ") ∩ F(n) != (y_1..y_" +
                                                 std::to_string(j) + ")F(n-e)"};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace mrees
