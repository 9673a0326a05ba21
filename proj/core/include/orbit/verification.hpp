// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbit/construction.hpp"

namespace orbit {

// Per-cardinality minima of complement mass, built by exhaustively sweeping
// all subsets of the support. Independent of the envelope code path by
// design: it never sorts, never builds envelopes.
class BruteFunctionalTable {
 public:
  explicit BruteFunctionalTable(const FiniteSequence& x);  // l0(x) <= 16

  // min over subsets S of |S| + t * sum_{i not in S} |x_i|
  Rat k_value(const Rat& t) const;
  // min over subsets with |S| <= floor(t) of sum_{i not in S} |x_i|
  Rat e_value(const Rat& t) const;

 private:
  std::vector<Rat> min_outside_;  // [c] = min complement mass over |S| = c
};

Rat brute_k_functional(const FiniteSequence& x, const Rat& t);
Rat brute_e_functional(const FiniteSequence& x, const Rat& t);

// Greatest convex minorant of t -> e_functional(x, t): the linear
// interpolation of the integer points (k, tail(k+1)). A second, geometric
// route to e_star used as its oracle.
Rat e_star_by_minorant(const FiniteSequence& x, const Rat& t);

// Deterministic generator; identical output for identical seeds on every
// platform (no standard-library distributions involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  std::int64_t below(std::int64_t n);  // uniform-ish in [0, n)
  Rat rat(long max_num, long max_den);

 private:
  std::uint64_t state_;
};

FiniteSequence random_sequence(Rng& rng, std::int64_t max_len, long max_num,
                               bool allow_negative);

SparseOperator random_sparse_operator(Rng& rng, std::int64_t max_dim,
                                      long max_num);

// Emits tail-dominated profile pairs (a, b): b is a random nonincreasing
// nonnegative profile, a starts equal to b and suffers random
// tail-preserving surgery: deletions and backward transfers are always
// safe, forward transfers are capped by the accumulated tail slack.
class DominatedPairGenerator {
 public:
  DominatedPairGenerator(std::uint64_t seed, std::int64_t max_len, long max_num);
  std::pair<FiniteSequence, FiniteSequence> next();  // (a, b)

 private:
  Rng rng_;
  std::int64_t max_len_;
  long max_num_;
};

struct ReportEntry {
  std::string check;
  bool pass = true;
  std::string details;
};
using Report = std::vector<ReportEntry>;

bool report_passes(const Report& report);

// Recomputes everything a certificate claims: the image apply(op, b) must
// equal a exactly, and the stored bounds must equal the recomputed column
// statistics.
Report verify_certificate(const OperatorCertificate& cert,
                          const FiniteSequence& a, const FiniteSequence& b);

// Necessity direction: for M = max(l1 norm, l0 expansion) of T, the image
// a = T b satisfies the orbit criterion at M.
OrbitVerdict prop1_check(const SparseOperator& T, const FiniteSequence& b);

// Round trip at twice the K-functional ratio: extracts C = k_orbit_constant,
// checks E(2t, a) <= 2C E(t/C, b) on the merged jump grid, checks the orbit
// criterion at 2C, builds the certificate there and verifies it together
// with the dilation-pipeline bounds.
Report corollary1_roundtrip(const FiniteSequence& a, const FiniteSequence& b);

// Condensed randomized sweep across the whole stack.
Report selftest(std::uint64_t seed, std::int64_t trials);

}  // namespace orbit
