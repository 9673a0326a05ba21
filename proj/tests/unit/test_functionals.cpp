// SPDX-License-Identifier: Apache-2.0

#include "orbit/functionals.hpp"
#include "orbit/verification.hpp"
#include "test_support.hpp"

using namespace orbit;
using orbit_test::iseq;
using orbit_test::seq;

TEST_SUITE("functionals") {

TEST_CASE("lower_envelope of the classic three-line fan") {
  // K-functional lines of the profile (3,2,1).
  const PiecewiseLinearConcave f = k_functional(iseq({3, 2, 1}));
  REQUIRE_EQ(f.segments().size(), 4);
  CHECK_EQ(f.segments()[0], EnvelopeSegment{Rat(6), Rat(0)});
  CHECK_EQ(f.segments()[1], EnvelopeSegment{Rat(3), Rat(1)});
  CHECK_EQ(f.segments()[2], EnvelopeSegment{Rat(1), Rat(2)});
  CHECK_EQ(f.segments()[3], EnvelopeSegment{Rat(0), Rat(3)});
  const std::vector<Rat> cuts{make_rat(1, 3), make_rat(1, 2), Rat(1)};
  CHECK_EQ(f.breakpoints(), cuts);
  CHECK_EQ(f.initial_slope(), Rat(6));
  CHECK_EQ(f.flat_value(), Rat(3));
}

TEST_CASE("lower_envelope drops dominated and parallel lines") {
  const PiecewiseLinearConcave f = PiecewiseLinearConcave::lower_envelope(
      {{Rat(2), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(2)}});
  // the middle line only touches at t = 1 and never wins alone
  REQUIRE_EQ(f.segments().size(), 2);
  CHECK_EQ(f.breakpoints(), std::vector<Rat>{Rat(1)});

  const PiecewiseLinearConcave g = PiecewiseLinearConcave::lower_envelope(
      {{Rat(1), Rat(5)}, {Rat(1), Rat(2)}, {Rat(1), Rat(3)}});
  REQUIRE_EQ(g.segments().size(), 1);
  CHECK_EQ(g.segments()[0], EnvelopeSegment{Rat(1), Rat(2)});

  CHECK_THROWS_AS(PiecewiseLinearConcave::lower_envelope({}),
                  std::invalid_argument);
}

TEST_CASE("envelope value at and between breakpoints") {
  const PiecewiseLinearConcave f = k_functional(iseq({3, 2, 1}));
  CHECK_EQ(f.value(Rat(0)), Rat(0));
  CHECK_EQ(f.value(make_rat(1, 3)), Rat(2));  // continuous at the cut
  CHECK_EQ(f.value(make_rat(1, 2)), make_rat(5, 2));
  CHECK_EQ(f.value(Rat(1)), Rat(3));
  CHECK_EQ(f.value(Rat(100)), Rat(3));
  CHECK_THROWS_AS(f.value(Rat(-1)), std::invalid_argument);
}

TEST_CASE("e_functional is the profile tail past floor(t)") {
  const FiniteSequence x = iseq({3, 1, 2});
  CHECK_EQ(e_functional(x, Rat(0)), Rat(6));
  CHECK_EQ(e_functional(x, Rat(1)), Rat(3));
  CHECK_EQ(e_functional(x, parse_rat("2.7")), Rat(1));
  CHECK_EQ(e_functional(x, Rat(3)), Rat(0));
  CHECK_EQ(e_functional(x, parse_rat("1/2")), Rat(6));
  CHECK_THROWS_AS(e_functional(x, Rat(-1)), std::invalid_argument);
}

TEST_CASE("k_eval on the (3,2,1) profile") {
  const FiniteSequence x = iseq({3, 2, 1});
  CHECK_EQ(k_eval(x, make_rat(1, 2)), make_rat(5, 2));
  CHECK_EQ(k_eval(x, make_rat(1, 6)), Rat(1));
  CHECK_EQ(k_eval(x, Rat(1000)), Rat(3));  // flat limit = support size
}

TEST_CASE("e_star on the (3,2,1) profile") {
  const FiniteSequence x = iseq({3, 2, 1});
  CHECK_EQ(e_star(x, Rat(0)), Rat(6));  // steepest slope = l1 norm
  CHECK_EQ(e_star(x, Rat(1)), Rat(3));
  CHECK_EQ(e_star(x, Rat(2)), Rat(1));
  CHECK_EQ(e_star(x, Rat(3)), Rat(0));  // t at the support size clamps
  CHECK_EQ(e_star(x, make_rat(7, 2)), Rat(0));
  CHECK_EQ(e_star(x, make_rat(1, 2)), make_rat(9, 2));
}

TEST_CASE("empty sequence conventions") {
  const FiniteSequence zero;
  CHECK_EQ(e_functional(zero, Rat(2)), Rat(0));
  CHECK_EQ(k_eval(zero, Rat(2)), Rat(0));
  CHECK_EQ(e_star(zero, Rat(0)), Rat(0));
  CHECK_EQ(k_functional(zero).flat_value(), Rat(0));
}

TEST_CASE("k functional is concave nondecreasing and zero at zero") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteSequence x = random_sequence(rng, 12, 30, true);
    const PiecewiseLinearConcave f = k_functional(x);
    CHECK_EQ(f.value(Rat(0)), Rat(0));
    for (std::size_t s = 1; s < f.segments().size(); ++s)
      CHECK(f.segments()[s].slope < f.segments()[s - 1].slope);
    CHECK(f.segments().back().slope >= 0);
    CHECK_EQ(f.flat_value(), Rat(l0_norm(x)));
    CHECK_EQ(f.initial_slope(), l1_norm(x));
  }
}

TEST_CASE("e_star equals the greatest convex minorant route") {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSequence x = random_sequence(rng, 10, 24, true);
    for (int rep = 0; rep < 6; ++rep) {
      const Rat t = rng.rat(12, 8);
      CHECK_EQ(e_star(x, t), e_star_by_minorant(x, t));
    }
  }
}

}  // TEST_SUITE
