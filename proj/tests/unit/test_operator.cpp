// SPDX-License-Identifier: Apache-2.0

#include "orbit/sparse_operator.hpp"
#include "orbit/verification.hpp"
#include "test_support.hpp"

using namespace orbit;
using orbit_test::iseq;
using orbit_test::seq;

TEST_SUITE("operator") {

TEST_CASE("construction guards") {
  SparseOperator T(3, 2);
  T.add(1, 2, Rat(5));
  CHECK_THROWS_AS(T.add(1, 2, Rat(1)), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(T.add(0, 1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(T.add(3, 1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(T.add(1, 4, Rat(1)), std::invalid_argument);
  T.add(2, 2, Rat(0));  // exact zeros vanish
  CHECK_EQ(T.entry_count(), 1);
  CHECK_THROWS_AS(SparseOperator(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(SparseOperator(3, -1), std::invalid_argument);
}

TEST_CASE("identity") {
  const SparseOperator id = SparseOperator::identity(3);
  CHECK_EQ(apply(id, iseq({4, -5, 6})), iseq({4, -5, 6}));
  CHECK_EQ(l1_operator_norm(id), Rat(1));
  CHECK_EQ(l0_expansion_bound(id), 1);
}

TEST_CASE("apply computes exact row products") {
  const SparseOperator T = SparseOperator::from_rows(
      4, 2, {{{1, Rat(1)}}, {{2, Rat(1)}, {3, Rat(1)}, {4, Rat(1)}}});
  CHECK_EQ(apply(T, iseq({4, 1, 1, 1})), iseq({4, 3}));
  CHECK_EQ(apply(T, iseq({4, 1})), iseq({4, 1}));  // short input zero-extends
  CHECK_THROWS_AS(apply(T, iseq({1, 1, 1, 1, 1})), std::invalid_argument);
  CHECK_EQ(l1_operator_norm(T), Rat(1));
  CHECK_EQ(l0_expansion_bound(T), 1);
}

TEST_CASE("norms scan columns") {
  SparseOperator T(2, 3);
  T.add(1, 1, make_rat(-1, 2));
  T.add(2, 1, Rat(1));
  T.add(3, 1, make_rat(3, 4));
  T.add(3, 2, Rat(2));
  CHECK_EQ(l1_operator_norm(T), make_rat(9, 4));
  CHECK_EQ(l0_expansion_bound(T), 3);
  CHECK_EQ(l1_operator_norm(SparseOperator(3, 3)), Rat(0));
  CHECK_EQ(l0_expansion_bound(SparseOperator(3, 3)), 0);
}

TEST_CASE("compose multiplies exactly and cancels") {
  SparseOperator S(2, 1), T(1, 2);
  S.add(1, 1, Rat(1));
  S.add(1, 2, Rat(-1));
  T.add(1, 1, Rat(1));
  T.add(2, 1, Rat(1));
  const SparseOperator R = compose(S, T);  // 1 - 1 = 0: everything cancels
  CHECK_EQ(R.entry_count(), 0);
  CHECK_THROWS_AS(compose(T, T), std::invalid_argument);
}

TEST_CASE("compose agrees with sequential application") {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const SparseOperator T = random_sparse_operator(rng, 8, 20);
    const SparseOperator S = dilation_up_operator(T.n_out(), 1 + rng.below(3));
    const FiniteSequence x = random_sequence(rng, T.n_in(), 20, true);
    CHECK_EQ(apply(compose(S, T), x), apply(S, apply(T, x)));
  }
}

TEST_CASE("padded extends and refuses to cut") {
  SparseOperator T(2, 2);
  T.add(2, 1, Rat(3));
  const SparseOperator wide = padded(T, 5, 4);
  CHECK_EQ(wide.n_in(), 5);
  CHECK_EQ(wide.n_out(), 4);
  CHECK_EQ(apply(wide, iseq({1, 1})), iseq({0, 3, 0, 0}));
  CHECK_EQ(padded(wide, 1, 2).entry_count(), 1);  // empty rows may go
  CHECK_THROWS_AS(padded(wide, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(padded(wide, 0, 4), std::invalid_argument);
}

TEST_CASE("dilation operators match the sequence dilations") {
  const SparseOperator up = dilation_up_operator(2, 2);
  CHECK_EQ(apply(up, iseq({3, 1})), iseq({3, 3, 1, 1}));
  CHECK_EQ(l1_operator_norm(up), Rat(2));
  CHECK_EQ(l0_expansion_bound(up), 2);

  const SparseOperator down = dilation_down_operator(4, 2);
  CHECK_EQ(apply(down, iseq({4, 2, 6, 0})), iseq({3, 3}));
  CHECK_EQ(l1_operator_norm(down), make_rat(1, 2));
  CHECK_EQ(l0_expansion_bound(down), 1);

  Rng rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    const FiniteSequence x = random_sequence(rng, 10, 20, true);
    const std::int64_t m = 1 + rng.below(5);
    CHECK_EQ(apply(dilation_up_operator(x.length(), m), x), dilate_up(x, m));
    CHECK_EQ(apply(dilation_down_operator(x.length(), m), x),
             dilate_down(x, m));
    CHECK_EQ(l1_operator_norm(dilation_up_operator(1 + rng.below(9), m)),
             Rat(m));
  }
}

TEST_CASE("profile conjugation operators") {
  Rng rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const FiniteSequence x = random_sequence(rng, 12, 30, true);
    const SortedProfile p = rearrange(x);
    const FiniteSequence prof{std::vector<Rat>(p.profile())};
    CHECK_EQ(apply(to_profile_operator(p), x), prof);
    CHECK_EQ(apply(from_profile_operator(p), prof), x);
    if (p.size() > 0) {
      const SparseOperator round =
          compose(to_profile_operator(p), from_profile_operator(p));
      CHECK_EQ(round, SparseOperator::identity(p.size()));
    }
  }
}

}  // TEST_SUITE
