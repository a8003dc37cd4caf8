#include "mrees/verifiers.hpp"

#include <sstream>

namespace mrees {

namespace {

constexpr const char* kAssumption =
    "assumes a good complete reduction of the normal filtration exists (monomial ideals: Cohen-Macaulay normal "
    "Rees algebra)";

void require_three_variables(const MonomialIdeal& I) {
  if (I.dimension() != 3) throw PreconditionError("this verifier works in three variables");
}

// Points of N^arity with the given per-coordinate range, in lex order.
std::vector<std::vector<Exponent>> grid(int arity, Exponent lo, Exponent hi) {
  std::vector<std::vector<Exponent>> out{{}};
  for (int k = 0; k < arity; ++k) {
    std::vector<std::vector<Exponent>> next;
    for (const auto& p : out) {
      for (Exponent v = lo; v <= hi; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

HilbertPoly stabilized(std::vector<MonomialIdeal> ideals) {
  FiltrationCache cache(std::move(ideals));
  return stabilized_fit(cache, cache.arity());
}

}  // namespace

CriterionValues criterion_values(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K) {
  require_three_variables(I);
  CriterionValues v;
  v.e3["I"] = e3_of_product({I});
  v.e3["J"] = e3_of_product({J});
  v.e3["K"] = e3_of_product({K});
  v.e3["IJ"] = e3_of_product({I, J});
  v.e3["IK"] = e3_of_product({I, K});
  v.e3["JK"] = e3_of_product({J, K});
  v.e3["IJK"] = e3_of_product({I, J, K});
  v.sum = v.e3["IJK"] - v.e3["IJ"] - v.e3["IK"] - v.e3["JK"] + v.e3["I"] + v.e3["J"] + v.e3["K"];
  return v;
}

std::int64_t criterion_sum(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K) {
  return criterion_values(I, J, K).sum;
}

CriterionReport evaluate_equivalences(const JrTriple& t, Exponent bound, FiltrationCache& cache) {
  require_three_variables(t.I);
  // A joint reduction of m-primary ideals generates an m-primary ideal; the
  // subset identities alone do not see this.
  if (!is_m_primary(minimalize(t.I.ring(), {t.a, t.b, t.c}))) {
    throw PreconditionError("(a, b, c) is not m-primary, so it is not a joint reduction");
  }
  const JrReport good = check_good_jr(t, bound, cache);
  if (!good.passed) throw PreconditionError("the triple is not a good joint reduction up to the bound");

  CriterionReport report;
  const CriterionValues values = criterion_values(t.I, t.J, t.K);
  report.e3_values = values.e3;
  report.criterion_sum = values.sum;
  report.jrn_zero = check_jrn_zero(t, bound, cache);
  report.jrn_zero_verified_to = report.jrn_zero.passed ? bound : 0;
  const LcOrigin lc = lc_origin_length(t, std::max<Exponent>(bound, 2) + 2, cache);
  report.lc_origin = lc.value;
  report.lc_stable_k = lc.stable_k;
  const bool sum_zero = report.criterion_sum == 0;
  report.consistent =
      sum_zero == report.jrn_zero.passed && sum_zero == (report.lc_origin == 0) && report.lc_origin == report.criterion_sum;
  report.notes.push_back("good joint reduction verified up to " + std::to_string(bound));
  report.notes.push_back(kAssumption);
  return report;
}

CriterionReport evaluate_equivalences(const JrTriple& t, Exponent bound) {
  FiltrationCache cache(t.hosts());
  return evaluate_equivalences(t, bound, cache);
}

CriterionReport verify_equivalences(const JrTriple& t, Exponent bound) {
  CriterionReport report = evaluate_equivalences(t, bound);
  if (!report.consistent) throw InvariantViolation("equivalence battery disagrees:\n" + describe(report));
  return report;
}

std::string describe(const CriterionReport& report) {
  std::ostringstream out;
  for (const auto& [name, value] : report.e3_values) out << "  e3(" << name << ") = " << value << "\n";
  out << "  criterion sum = " << report.criterion_sum << "\n";
  out << "  jrn zero: " << (report.jrn_zero.passed ? "verified" : "fails") << " up to " << report.jrn_zero.bound;
  if (report.jrn_zero.first_failure) {
    const auto& p = report.jrn_zero.first_failure->point;
    out << " (first failure at (" << p[0] << "," << p[1] << "," << p[2] << "))";
  }
  out << "\n  origin length = " << report.lc_origin << " (stable at k = " << report.lc_stable_k << ")\n";
  out << "  consistent = " << (report.consistent ? "true" : "false") << "\n";
  return out.str();
}

TripleFits fit_triple(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K) {
  require_three_variables(I);
  return {stabilized({I, J, K}), stabilized({I, J}), stabilized({I, K}), stabilized({J, K}),
          stabilized({I}),       stabilized({J}),    stabilized({K})};
}

CheckReport mixed_coefficient_relations(const TripleFits& f) {
  CheckReport report;
  report.check = "mixed-relations";
  const auto e1 = [](const HilbertPoly& p) { return p.univariate()[1]; };
  const auto e0 = [](const HilbertPoly& p) { return p.univariate()[0]; };
  report.compare("e(2,0,0) = e1(I)", f.ijk.coefficient({2, 0, 0}), e1(f.i));
  report.compare("e(0,2,0) = e1(J)", f.ijk.coefficient({0, 2, 0}), e1(f.j));
  report.compare("e(0,0,2) = e1(K)", f.ijk.coefficient({0, 0, 2}), e1(f.k));
  report.compare("e(1,1,0) = e(1,1)(I,J)", f.ijk.coefficient({1, 1, 0}), f.ij.coefficient({1, 1, 0}));
  report.compare("e(0,1,1) = e(1,1)(J,K)", f.ijk.coefficient({0, 1, 1}), f.jk.coefficient({1, 1, 0}));
  report.compare("e(1,0,1) = e(1,1)(I,K)", f.ijk.coefficient({1, 0, 1}), f.ik.coefficient({1, 1, 0}));

  report.compare("e(3,0,0) = e0(I)", f.ijk.coefficient({3, 0, 0}), e0(f.i));
  report.compare("e(3,0)(I,J) = e0(I)", f.ij.coefficient({3, 0, 0}), e0(f.i));
  report.compare("e(3,0)(I,K) = e0(I)", f.ik.coefficient({3, 0, 0}), e0(f.i));
  report.compare("e(0,3,0) = e0(J)", f.ijk.coefficient({0, 3, 0}), e0(f.j));
  report.compare("e(0,3)(I,J) = e0(J)", f.ij.coefficient({0, 3, 0}), e0(f.j));
  report.compare("e(3,0)(J,K) = e0(J)", f.jk.coefficient({3, 0, 0}), e0(f.j));
  report.compare("e(0,0,3) = e0(K)", f.ijk.coefficient({0, 0, 3}), e0(f.k));
  report.compare("e(0,3)(I,K) = e0(K)", f.ik.coefficient({0, 3, 0}), e0(f.k));
  report.compare("e(0,3)(J,K) = e0(K)", f.jk.coefficient({0, 3, 0}), e0(f.k));
  report.compare("e(2,1,0) = e(2,1)(I,J)", f.ijk.coefficient({2, 1, 0}), f.ij.coefficient({2, 1, 0}));
  report.compare("e(1,2,0) = e(1,2)(I,J)", f.ijk.coefficient({1, 2, 0}), f.ij.coefficient({1, 2, 0}));
  report.compare("e(2,0,1) = e(2,1)(I,K)", f.ijk.coefficient({2, 0, 1}), f.ik.coefficient({2, 1, 0}));
  report.compare("e(1,0,2) = e(1,2)(I,K)", f.ijk.coefficient({1, 0, 2}), f.ik.coefficient({1, 2, 0}));
  report.compare("e(0,2,1) = e(2,1)(J,K)", f.ijk.coefficient({0, 2, 1}), f.jk.coefficient({2, 1, 0}));
  report.compare("e(0,1,2) = e(1,2)(J,K)", f.ijk.coefficient({0, 1, 2}), f.jk.coefficient({1, 2, 0}));
  return report;
}

CheckReport mixed_coefficient_relations(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& K) {
  return mixed_coefficient_relations(fit_triple(I, J, K));
}

CheckReport linear_coefficients_vanish(const JrTriple& t, Exponent bound) {
  require_three_variables(t.I);
  if (bound < 1) throw PreconditionError("bound must be positive");
  CheckReport report;
  report.check = "linear-coefficients";
  report.bound = bound;
  report.notes.push_back(kAssumption);

  const TripleFits f = fit_triple(t.I, t.J, t.K);
  const auto e2 = [](const HilbertPoly& p) { return p.univariate()[2]; };
  const std::int64_t lr =
      f.ij.coefficient({1, 0, 0}) + f.ik.coefficient({1, 0, 0}) - f.ijk.coefficient({1, 0, 0}) - e2(f.i);
  const std::int64_t ls =
      f.ij.coefficient({0, 1, 0}) + f.jk.coefficient({1, 0, 0}) - f.ijk.coefficient({0, 1, 0}) - e2(f.j);
  const std::int64_t lt =
      f.ik.coefficient({0, 1, 0}) + f.jk.coefficient({0, 1, 0}) - f.ijk.coefficient({0, 0, 1}) - e2(f.k);
  report.compare("coefficient of r", lr, 0);
  report.compare("coefficient of s", ls, 0);
  report.compare("coefficient of t", lt, 0);

  const std::int64_t constant = criterion_sum(t.I, t.J, t.K);
  FiltrationCache cache(t.hosts());
  report.compare("S(1,1,1) vs criterion sum", s_length(t, {1, 1, 1}, cache), constant);
  for (const auto& p : grid(3, 1, bound)) {
    const Grade g{p[0], p[1], p[2]};
    const Exponent s = s_length(t, g, cache);
    if (s != constant) report.fail({p, std::nullopt, "S = " + std::to_string(s) + " differs from the criterion sum " + std::to_string(constant)});
    const std::int64_t formula = p[0] * lr + p[1] * ls + p[2] * lt + constant;
    if (s != formula) report.fail({p, std::nullopt, "S = " + std::to_string(s) + " but the linear formula gives " + std::to_string(formula)});
  }
  return report;
}

VitulliReport vitulli_check(const std::vector<MonomialIdeal>& ideals, Exponent bound) {
  if (ideals.empty() || ideals.size() > 3) throw PreconditionError("vitulli_check takes 1 to 3 ideals");
  if (bound < 1) throw PreconditionError("bound must be positive");
  VitulliReport report;
  report.arity = static_cast<int>(ideals.size());
  report.bound = bound;
  FiltrationCache normal(ideals, FiltrationKind::Normal);
  FiltrationCache adic(ideals, FiltrationKind::Adic);

  auto verdict = [&](const std::vector<Exponent>& n) {
    ProductVerdict v;
    v.exponents = n;
    const MonomialIdeal& product = adic.entry(n).ideal;
    const MonomialIdeal& closure = normal.entry(n).ideal;
    v.complete = product == closure;
    if (!v.complete) v.witness = generator_not_in(closure, product);
    return v;
  };

  for (const auto& n : grid(report.arity, 0, 2)) {
    Exponent total = 0;
    for (Exponent e : n) total += e;
    if (total > 2) continue;
    ProductVerdict v = verdict(n);
    if (!v.complete && report.hypothesis_holds) {
      report.hypothesis_holds = false;
      report.first_incomplete = v;
    }
    report.hypothesis.push_back(std::move(v));
  }
  // Lex order lists (0,..,2) before (1,..,0); report the smallest total degree first.
  std::stable_sort(report.hypothesis.begin(), report.hypothesis.end(), [](const auto& a, const auto& b) {
    Exponent sa = 0, sb = 0;
    for (Exponent e : a.exponents) sa += e;
    for (Exponent e : b.exponents) sb += e;
    return sa < sb;
  });
  for (const auto& v : report.hypothesis) {
    if (!v.complete) {
      report.first_incomplete = v;
      break;
    }
  }

  report.phase2.check = "vitulli";
  report.phase2.bound = bound;
  if (!report.hypothesis_holds) return report;
  report.phase2_ran = true;
  for (const auto& n : grid(report.arity, 0, bound)) {
    const ProductVerdict v = verdict(n);
    if (!v.complete) {
      report.phase2.fail({n, v.witness, "incomplete product although every product of total exponent <= 2 is complete"});
    }
  }
  return report;
}

}  // namespace mrees
