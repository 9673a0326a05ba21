// SPDX-License-Identifier: Apache-2.0

#include "orbit/marcinkiewicz.hpp"
#include "orbit/verification.hpp"
#include "test_support.hpp"

using namespace orbit;
using orbit_test::iseq;
using orbit_test::seq;

TEST_SUITE("marc") {

TEST_CASE("telescoping quadratic family") {
  const WeightFamily w = WeightFamily::telescoping_quadratic();
  CHECK_EQ(w.alpha(1), Rat(2));
  CHECK_EQ(w.alpha(2), Rat(6));
  CHECK_EQ(w.alpha(3), Rat(12));
  CHECK_EQ(w.beta_lower(5), make_rat(1, 5));
  CHECK_EQ(w.beta_upper(5), make_rat(1, 5));  // reciprocals telescope exactly
  CHECK(w.beta_exact());
  CHECK_EQ(w.r1(), Rat(4));
  CHECK_EQ(w.r2(), Rat(2));
  CHECK_FALSE(w.horizon().has_value());
  CHECK_THROWS_AS(w.alpha(0), std::invalid_argument);
  CHECK_THROWS_AS(w.p(), std::logic_error);
}

TEST_CASE("power family uses integral enclosures") {
  const WeightFamily half = WeightFamily::power(make_rat(1, 2));
  CHECK_EQ(half.alpha(3), Rat(9));
  CHECK_EQ(half.p(), make_rat(1, 2));
  CHECK_EQ(half.r1(), Rat(4));
  CHECK_EQ(half.r2(), Rat(2));
  CHECK_EQ(half.beta_lower(3), make_rat(1, 3));
  CHECK_EQ(half.beta_upper(3), make_rat(2, 3));
  CHECK_FALSE(half.beta_exact());

  const WeightFamily third = WeightFamily::power(make_rat(1, 3));
  CHECK_EQ(third.alpha(2), Rat(8));
  CHECK_EQ(third.r1(), Rat(8));
  CHECK_EQ(third.r2(), make_rat(3, 2));
  CHECK_EQ(third.beta_lower(2), make_rat(1, 8));
  CHECK_EQ(third.beta_upper(2), make_rat(3, 8));

  CHECK_THROWS_AS(WeightFamily::power(make_rat(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(WeightFamily::power(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(WeightFamily::power(Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(WeightFamily::power(Rat(-2)), std::invalid_argument);
}

TEST_CASE("pairwise tables are validated against their tails") {
  const std::vector<Rat> alpha = {Rat(2), Rat(6), Rat(12), Rat(20), Rat(30), Rat(42)};
  const std::vector<Rat> beta = {Rat(1),          make_rat(1, 2), make_rat(1, 3),
                                 make_rat(1, 4), make_rat(1, 5), make_rat(1, 6)};
  const WeightFamily w = WeightFamily::pairwise(alpha, beta);
  CHECK_EQ(w.horizon(), 6);
  CHECK_EQ(w.alpha(4), Rat(20));
  CHECK_EQ(w.beta_lower(4), make_rat(1, 4));
  CHECK(w.beta_exact());
  CHECK_EQ(w.r1(), make_rat(7, 2));  // attained at alpha_6 / alpha_3
  CHECK_EQ(w.r2(), Rat(2));          // attained at k = 1
  CHECK_THROWS_AS(w.alpha(7), std::out_of_range);
  CHECK_THROWS_AS(w.beta_upper(7), std::out_of_range);

  CHECK_THROWS_AS(WeightFamily::pairwise({Rat(2)}, {Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightFamily::pairwise({Rat(2), Rat(6)}, {Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightFamily::pairwise({Rat(2), Rat(1)}, {Rat(1), make_rat(1, 2)}),
                  std::invalid_argument);  // alpha decreasing
  CHECK_THROWS_AS(WeightFamily::pairwise({Rat(2), Rat(6)}, {Rat(1), make_rat(1, 3)}),
                  std::invalid_argument);  // beta does not telescope
  CHECK_THROWS_AS(WeightFamily::pairwise({Rat(2), Rat(6)},
                                         {make_rat(5, 8), make_rat(1, 8)}),
                  std::invalid_argument);  // final tail below 1/alpha_n
  CHECK_THROWS_AS(WeightFamily::pairwise({Rat(0), Rat(6)}, {Rat(1), make_rat(1, 2)}),
                  std::invalid_argument);
}

TEST_CASE("geometric table needs doubling constant eight") {
  std::vector<Rat> alpha, beta;
  for (long k = 1; k <= 6; ++k) {
    alpha.push_back(rat_pow(Rat(2), static_cast<unsigned long>(k)));
    beta.push_back(make_rat(2, 1) / alpha.back());  // beta_k = 2^(1-k)
  }
  const WeightFamily w = WeightFamily::pairwise(alpha, beta);
  CHECK_EQ(w.r1(), Rat(8));  // alpha_6 / alpha_3; 4 would fail there
  CHECK_EQ(w.r2(), Rat(2));
  CHECK(check_doubling(w, 1000).holds);
  CHECK(check_tail_condition(w, 1000).holds);
}

TEST_CASE("norm and equivalent norm on small sequences") {
  const WeightFamily w = WeightFamily::telescoping_quadratic();
  const FiniteSequence x = seq({"1", "1/2"});
  CHECK_EQ(norm_alpha(x, w), Rat(3));
  CHECK_EQ(equiv_norm(x, w), NormInterval{make_rat(3, 2), make_rat(3, 2)});
  CHECK_EQ(norm_alpha(FiniteSequence(), w), Rat(0));
  CHECK_EQ(equiv_norm(FiniteSequence(), w), NormInterval{Rat(0), Rat(0)});
  CHECK_EQ(norm_alpha(iseq({0, -1, 0}), w), Rat(2));

  const WeightFamily half = WeightFamily::power(make_rat(1, 2));
  const NormInterval box = equiv_norm(x, half);
  CHECK_LT(box.lo, box.hi);  // inexact tails leave a genuine gap
  CHECK_EQ(box.lo, make_rat(3, 4));
  CHECK_EQ(box.hi, make_rat(3, 2));
}

TEST_CASE("regularity checks hold on the closed forms") {
  CHECK(check_doubling(WeightFamily::telescoping_quadratic(), 1000).holds);
  CHECK(check_tail_condition(WeightFamily::telescoping_quadratic(), 1000).holds);
  CHECK(check_doubling(WeightFamily::power(make_rat(1, 2)), 1000).holds);
  CHECK(check_tail_condition(WeightFamily::power(make_rat(1, 2)), 1000).holds);
  CHECK(check_doubling(WeightFamily::power(make_rat(1, 4)), 500).holds);
  CHECK(check_tail_condition(WeightFamily::power(make_rat(1, 4)), 500).holds);
}

TEST_CASE("sandwich bounds the norm both ways") {
  const WeightFamily w = WeightFamily::telescoping_quadratic();
  SUBCASE("two entries") {
    const SandwichReport r = sandwich_check(seq({"1", "1/2"}), w);
    CHECK_EQ(r.alpha_norm, Rat(3));
    CHECK_EQ(r.equiv, NormInterval{make_rat(3, 2), make_rat(3, 2)});
    CHECK_EQ(r.left_factor, make_rat(1, 32));
    CHECK(r.left_holds);
    CHECK(r.right_holds);
    CHECK(r.beta_exact);
    CHECK(r.holds());
  }
  SUBCASE("single spike") {
    const SandwichReport r = sandwich_check(iseq({1}), w);
    CHECK_EQ(r.alpha_norm, Rat(2));
    CHECK_EQ(r.equiv, NormInterval{Rat(1), Rat(1)});
    CHECK(r.holds());
  }
  SUBCASE("zero sequence") {
    const SandwichReport r = sandwich_check(FiniteSequence(), w);
    CHECK_EQ(r.alpha_norm, Rat(0));
    CHECK(r.holds());
  }
}

TEST_CASE("sandwich holds on random sequences for every family") {
  const WeightFamily families[] = {WeightFamily::telescoping_quadratic(),
                                   WeightFamily::power(make_rat(1, 2)),
                                   WeightFamily::power(make_rat(1, 3))};
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSequence x = random_sequence(rng, 30, 40, true);
    for (const WeightFamily& w : families) {
      const SandwichReport r = sandwich_check(x, w);
      CHECK(r.holds());
      if (w.beta_exact()) CHECK_LE(r.equiv.hi, r.alpha_norm);
      CHECK_LE(r.left_factor * r.alpha_norm, r.equiv.lo);
    }
  }
}

TEST_CASE("doubling gives the quasi-triangle inequality") {
  const WeightFamily w = WeightFamily::telescoping_quadratic();
  Rng rng(52);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteSequence x = random_sequence(rng, 12, 20, true);
    const FiniteSequence y = random_sequence(rng, 12, 20, true);
    CHECK_LE(norm_alpha(add(x, y), w),
             w.r1() * (norm_alpha(x, w) + norm_alpha(y, w)));
  }
}

TEST_CASE("pairwise norms refuse support past the horizon") {
  const WeightFamily w =
      WeightFamily::pairwise({Rat(2), Rat(6)}, {Rat(1), make_rat(1, 2)});
  CHECK_EQ(norm_alpha(iseq({3, 1}), w), Rat(6));
  CHECK_THROWS_AS(norm_alpha(iseq({3, 2, 1}), w), std::out_of_range);
  CHECK_THROWS_AS(equiv_norm(iseq({3, 2, 1}), w), std::out_of_range);
}

}  // TEST_SUITE
