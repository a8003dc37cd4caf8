#include "doctest.h"
#include "helpers.hpp"
#include "mrees/verifiers.hpp"

using namespace mrees;
using testing::ideal;
using testing::mono;
using testing::R3;

TEST_CASE("criterion sum of the example ideals") {
  const CriterionValues v = criterion_values(ideal("(x,y,z)"), ideal("(x^2,y,z)"), ideal("(x^2,y,z)"));
  CHECK(v.sum == 0);
  CHECK(v.e3.size() == 7);
  for (const auto& [name, e3] : v.e3) CHECK(e3 == 0);
}

TEST_CASE("criterion sum is symmetric") {
  const auto ideals = random_m_primary_ideals(41, 6, R3(), 3);
  const auto &I = ideals[0], &J = ideals[1], &K = ideals[2];
  const std::int64_t s = criterion_sum(I, J, K);
  CHECK(criterion_sum(J, I, K) == s);
  CHECK(criterion_sum(K, J, I) == s);
  CHECK(criterion_sum(I, K, J) == s);
}

TEST_CASE("equivalences on the example triple") {
  const JrTriple t(ideal("(x,y,z)"), ideal("(x^2,y,z)"), ideal("(x^2,y,z)"), mono("x"), mono("y"), mono("z"));
  const CriterionReport r = verify_equivalences(t, 4);
  CHECK(r.consistent);
  CHECK(r.criterion_sum == 0);
  CHECK(r.lc_origin == 0);
  CHECK(r.jrn_zero.passed);
  CHECK(r.jrn_zero_verified_to == 4);
  CHECK(r.lc_stable_k <= 3);
  CHECK(describe(r).find("consistent") != std::string::npos);
}

TEST_CASE("equivalences need a good joint reduction") {
  // Powers of x pass every proper-subset identity but generate no m-primary ideal.
  const auto m = ideal("(x,y,z)");
  const JrTriple bad(m, ideal("(x^2,y^2,z^2,xy)"), m, mono("x"), mono("x^2"), mono("x"));
  CHECK(check_good_jr(bad, 2).passed);
  CHECK_THROWS_AS(verify_equivalences(bad, 2), PreconditionError);
}

TEST_CASE("mixed coefficient relations") {
  const CheckReport r = mixed_coefficient_relations(ideal("(x^2,y^2,z^2)"), ideal("(x,y,z)"), ideal("(x,y,z)"));
  CHECK(r.passed);
  const TripleFits f = fit_triple(ideal("(x^2,y^2,z^2)"), ideal("(x,y,z)"), ideal("(x,y,z)"));
  CHECK(f.ijk.coefficient({2, 0, 0}) == 4);
  CHECK(f.i.univariate()[1] == 4);
  CHECK(f.ijk.coefficient({3, 0, 0}) == 8);
  // e(1,1,0) of (m, m) is zero: all degree-two terms vanish for m.
  const TripleFits mm = fit_triple(ideal("(x,y,z)"), ideal("(x,y,z)"), ideal("(x,y,z)"));
  CHECK(mm.ijk.coefficient({1, 1, 0}) == 0);
  CHECK(mm.ijk.coefficient({1, 1, 1}) == 1);
}

TEST_CASE("linear coefficients of the origin length vanish") {
  const JrTriple t(ideal("(x,y,z)"), ideal("(x^2,y,z)"), ideal("(x^2,y,z)"), mono("x"), mono("y"), mono("z"));
  CHECK(linear_coefficients_vanish(t, 3).passed);
  const Corpus corpus = admissible_corpus(3, 4, 3, 2, 200);
  for (const auto& e : corpus.admissible) CHECK(linear_coefficients_vanish(e.triple, 2).passed);
}

TEST_CASE("vitulli check") {
  const VitulliReport ex = vitulli_check({ideal("(x,y,z)"), ideal("(x^2,y,z)"), ideal("(x^2,y,z)")}, 4);
  CHECK(ex.hypothesis.size() == 10);
  CHECK(ex.hypothesis_holds);
  CHECK(ex.phase2_ran);
  CHECK(ex.phase2.passed);
  CHECK(ex.consistent());

  const VitulliReport q = vitulli_check({ideal("(x^2,y^2,z^2)")}, 4);
  CHECK_FALSE(q.hypothesis_holds);
  REQUIRE(q.first_incomplete);
  CHECK(q.first_incomplete->exponents == std::vector<Exponent>{1});
  CHECK(*q.first_incomplete->witness == mono("xy"));
  CHECK(q.consistent());
}

TEST_CASE("vitulli phase two never fails after phase one") {
  const auto ideals = random_m_primary_ideals(77, 12, R3(), 3);
  for (std::size_t i = 0; i + 1 < ideals.size(); i += 2) {
    const VitulliReport r = vitulli_check({ideals[i], ideals[i + 1]}, 3);
    CHECK(r.consistent());
  }
}

TEST_CASE("first admissible corpus triple, frozen with exact oracle values") {
  // Values from an exact rational count against the Minkowski-sum Newton
  // polyhedron, taken outside this library and pinned here.
  const Corpus corpus = admissible_corpus(2026, 1, 4, 3, 2000);
  REQUIRE(corpus.admissible.size() == 1);
  const JrTriple& t = corpus.admissible.front().triple;
  CHECK(corpus.admissible.front().sample == 3);
  CHECK(t.I == ideal("(x^2,y^2,z^4)"));
  CHECK(t.J == ideal("(x^3,y^4,z^4)"));
  CHECK(t.K == ideal("(x,y^3,z^3)"));
  CHECK(t.a == mono("y^2"));
  CHECK(t.b == mono("z^4"));
  CHECK(t.c == mono("x"));

  struct Frozen {
    MonomialIdeal product;
    std::array<std::int64_t, 4> h;  // normal colengths at n = 1..4
    std::array<std::int64_t, 4> e;
  };
  const std::vector<Frozen> frozen{
      {t.I, {8, 40, 112, 240}, {16, 8, 0, 0}},
      {t.J, {19, 104, 303, 664}, {48, 30, 1, 0}},
      {t.K, {6, 27, 72, 150}, {9, 3, 0, 0}},
      {multiply(t.I, t.J), {57, 344, 1045, 2344}, {184, 138, 11, 0}},
      {multiply(t.I, t.K), {26, 143, 418, 918}, {67, 43, 2, 0}},
      {multiply(t.J, t.K), {47, 275, 825, 1838}, {141, 101, 7, 0}},
      {multiply(multiply(t.I, t.J), t.K), {105, 655, 2017, 4558}, {367, 289, 27, 0}},
  };
  for (const auto& f : frozen) {
    FiltrationCache cache({f.product});
    for (Exponent n = 1; n <= 4; ++n) {
      CHECK(cache.colength_at(std::array<Exponent, 1>{n}) == f.h[static_cast<std::size_t>(n - 1)]);
    }
    CHECK(stabilized_fit(cache, 1).univariate() == f.e);
  }
  CHECK(criterion_sum(t.I, t.J, t.K) == 0);
  CHECK(verify_equivalences(t, 3).consistent);
}
