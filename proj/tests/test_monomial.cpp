#include "doctest.h"
#include "helpers.hpp"

using namespace mrees;
using testing::ideal;
using testing::mono;
using testing::R3;

TEST_CASE("canonical form and printing") {
  const MonomialIdeal I = minimalize(R3(), {{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {2, 1, 0}, {1, 1, 3}});
  CHECK(I.generators() == std::vector<ExponentVector>{{0, 2, 0}, {1, 1, 0}, {2, 0, 0}});
  CHECK(format_ideal(I) == "(x^2, xy, y^2)");
  CHECK(format_ideal(MonomialIdeal::zero(R3())) == "(0)");
  CHECK(format_ideal(MonomialIdeal::unit(R3())) == "(1)");
  CHECK(MonomialIdeal::unit(R3()).is_unit());
  CHECK(MonomialIdeal::zero(R3()).is_zero());
}

TEST_CASE("products sums and powers") {
  CHECK(multiply(ideal("(x,y)"), ideal("(x,y)")) == ideal("(x^2,xy,y^2)"));
  CHECK(power(ideal("(x,y,z)"), 2).size() == 6);
  CHECK(power(ideal("(x,y)"), 0).is_unit());
  CHECK(add(ideal("(x^2)"), ideal("(x,y^3)")) == ideal("(x,y^3)"));
  CHECK(scale(ideal("(x,y)"), {0, 0, 1}) == ideal("(xz,yz)"));
  CHECK(multiply(ideal("(x)"), MonomialIdeal::zero(R3())).is_zero());
}

TEST_CASE("intersection and colon") {
  CHECK(intersect(ideal("(x^2,y)"), ideal("(x,y^2)")) == ideal("(x^2,xy,y^2)"));
  CHECK(colon(ideal("(x^2,xy,y^2)"), ideal("(x)")) == ideal("(x,y)"));
  CHECK(colon(ideal("(x^2)"), ideal("(x^3)")).is_unit());
  CHECK_THROWS_AS(colon(ideal("(x)"), MonomialIdeal::zero(R3())), ZeroIdealError);
}

TEST_CASE("m-primary detection and bounds") {
  CHECK(is_m_primary(ideal("(x^2,y^3,z,xy)")));
  CHECK_FALSE(is_m_primary(ideal("(x^2,y^3)")));
  CHECK(*pure_power_bounds(ideal("(x^2,y^3,z^5,xy)")) == ExponentVector{2, 3, 5});
  CHECK(generator_box(ideal("(x^2y,y^3z)")) == ExponentVector{2, 3, 1});
}

TEST_CASE("witness is the lex-largest generator outside") {
  const auto w = generator_not_in(ideal("(x^2,xy,y^2,z)"), ideal("(x^2,y^2,z)"));
  REQUIRE(w);
  CHECK(*w == mono("xy"));
  CHECK_FALSE(generator_not_in(ideal("(x^2)"), ideal("(x)")));
}

TEST_CASE("ring and arithmetic errors") {
  const RingContext R2 = RingContext::standard(2);
  CHECK_THROWS_AS(add(ideal("(x)"), ideal("(x)", R2)), DimensionMismatch);
  CHECK_THROWS_AS(minimalize(R3(), {{1, 2}}), DimensionMismatch);
  CHECK_THROWS_AS(power(ideal("(x^4611686018427387904)"), 4), ExponentOverflow);
  CHECK_THROWS_AS(RingContext({"x", "y", "z", "w"}), DimensionMismatch);
  CHECK_THROWS_AS(RingContext({"x", "x"}), PreconditionError);
}

TEST_CASE("power cache matches repeated multiplication") {
  const MonomialIdeal I = ideal("(x^2,xy^3,z)");
  PowerCache cache(I);
  MonomialIdeal p = MonomialIdeal::unit(R3());
  for (Exponent n = 1; n <= 5; ++n) {
    p = multiply(p, I);
    CHECK(cache.power(n) == p);
  }
  CHECK(cache.power(0).is_unit());
}

TEST_CASE("ideal algebra laws (seeded property run)") {
  std::mt19937_64 rng(20261014);
  int cases = 0;
  for (int round = 0; round < 200; ++round) {
    const RingContext& ring = round % 4 == 0 ? RingContext::standard(2) : R3();
    const auto I = testing::random_ideal(rng, ring, 4, 4);
    const auto J = testing::random_ideal(rng, ring, 4, 4);
    const auto K = testing::random_ideal(rng, ring, 4, 4);
    const auto IJ = multiply(I, J);
    CHECK(is_subset(IJ, intersect(I, J)));
    CHECK(is_subset(I, colon(IJ, J)));
    CHECK(intersect(I, J) == intersect(J, I));
    CHECK(add(I, J) == add(J, I));
    CHECK(IJ == multiply(J, I));
    CHECK(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)));
    CHECK(add(add(I, J), K) == add(I, add(J, K)));
    CHECK(multiply(IJ, K) == multiply(I, multiply(J, K)));
    CHECK(intersect(I, I) == I);
    CHECK(add(I, I) == I);
    CHECK(minimalize(ring, I.generators()) == I);

    // Membership, intersection and colon against generator scans.
    const auto gi = oracle::gens_of(I), gj = oracle::gens_of(J);
    const auto inter = intersect(I, J);
    const auto col = colon(I, J);
    for (const auto& v : testing::box_points({5, 5, 5}, ring.dimension())) {
      const auto ev = testing::as_ev(v, ring.dimension());
      const bool in_i = oracle::member(gi, v), in_j = oracle::member(gj, v);
      CHECK(contains_monomial(I, ev) == in_i);
      CHECK(contains_monomial(inter, ev) == (in_i && in_j));
      bool in_colon = true;
      for (const auto& g : gj) in_colon = in_colon && oracle::member(gi, {v[0] + g[0], v[1] + g[1], v[2] + g[2]});
      CHECK(contains_monomial(col, ev) == in_colon);
    }
    ++cases;
  }
  CHECK(cases == 200);
}
