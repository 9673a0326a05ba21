// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "orbit/majorization.hpp"
#include "orbit/sparse_operator.hpp"

namespace orbit {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Greedy allocation ran out of donor mass; the tail-domination
// precondition was violated.
struct InfeasibleError : ConstructionError {
  using ConstructionError::ConstructionError;
};

// The orbit criterion does not hold at the requested constant.
struct CriterionError : ConstructionError {
  CriterionError(std::string what, std::int64_t witness)
      : ConstructionError(std::move(what)), witness_k(witness) {}
  std::int64_t witness_k;
};

// Index classes over profiles padded to a common length n:
// J = deficit (a_i > 2 b_i), I = donor (a_i < b_i), K = the rest.
struct Partition {
  std::vector<std::int64_t> J, I, K;  // ascending, disjoint, cover 1..n
  std::int64_t n = 0;
};

Partition partition_indices(const SortedProfile& a_star,
                            const SortedProfile& b_star);

struct AllocationBlock {
  std::int64_t j = 0;                  // deficit index
  Rat delta;                           // a_j - b_j
  Rat carried;                         // spill absorbed from the previous block
  std::vector<std::int64_t> consumed;  // donors drained completely
  std::int64_t carrier = 0;            // donor drained partially
  Rat eta_prime;                       // amount taken from the carrier
  Rat spill;                           // donor mass left at the carrier
};

// Greedy cover of each deficit delta_k by donor mass eta_i = b_i - a_i,
// scanning donors left to right. Only the block right after k may absorb
// k's spill, and only when the carrier sits past that block's deficit
// index. Per block: sum(eta over consumed) + eta_prime + carried = delta.
struct AllocationPlan {
  std::vector<AllocationBlock> blocks;
  std::vector<std::int64_t> unused;  // donors never touched
};

AllocationPlan allocate_greedy(const SortedProfile& a_star,
                               const SortedProfile& b_star,
                               const Partition& partition);

struct OperatorCertificate {
  SparseOperator op;
  Rat l1_bound;               // recomputed max column absolute sum
  std::int64_t l0_expansion;  // recomputed max column support size
  std::string pipeline_json;  // how it was assembled: partition, plan, dilation, maps
};

// Operator T with T b* = a* for tail-dominated profiles. Columns of donor
// and deficit indices sum to at most 1, the rest to at most 2; no column
// feeds more than 3 rows.
OperatorCertificate build_prop2_operator(const SortedProfile& a_star,
                                         const SortedProfile& b_star);

// Full pipeline for the orbit criterion at constant C: conjugate by the
// rearrangement maps and dilate by 3(floor(C)+1) when C > 1, or average
// blocks of floor(1/C) when C <= 1, then run the profile construction.
// Throws CriterionError when the criterion fails at C.
OperatorCertificate build_orbit_operator(const FiniteSequence& a,
                                         const FiniteSequence& b, const Rat& C);

}  // namespace orbit
