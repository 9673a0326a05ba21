// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "orbit/sequence.hpp"

namespace orbit {

struct OperatorEntry {
  std::int64_t in;  // 1-based input index
  Rat coeff;        // never zero

  bool operator==(const OperatorEntry&) const = default;
};

// Sparse linear map from length-n_in vectors to length-n_out vectors,
// stored by output row. Zero coefficients are never stored.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(std::int64_t n_in, std::int64_t n_out);

  static SparseOperator identity(std::int64_t n);
  static SparseOperator from_rows(std::int64_t n_in, std::int64_t n_out,
                                  std::vector<std::vector<OperatorEntry>> rows);

  std::int64_t n_in() const { return n_in_; }
  std::int64_t n_out() const { return n_out_; }
  const std::vector<std::vector<OperatorEntry>>& rows() const { return rows_; }

  // Adds a coefficient to row `out`. Silently drops exact zeros; rejects a
  // duplicate (out, in) slot.
  void add(std::int64_t out, std::int64_t in, Rat coeff);

  std::int64_t entry_count() const;
  bool operator==(const SparseOperator&) const = default;

 private:
  std::int64_t n_in_ = 0;
  std::int64_t n_out_ = 0;
  std::vector<std::vector<OperatorEntry>> rows_;
};

// Requires x.length() <= T.n_in(); entries of x past its length are zero.
FiniteSequence apply(const SparseOperator& T, const FiniteSequence& x);

// Matrix product S * T. Requires S.n_in() == T.n_out(). Exact cancellation
// removes entries.
SparseOperator compose(const SparseOperator& S, const SparseOperator& T);

// Norm of the operator from l1 to l1: max column absolute sum.
Rat l1_operator_norm(const SparseOperator& T);

// Max column support size; certifies l0(Tx) <= bound * l0(x).
std::int64_t l0_expansion_bound(const SparseOperator& T);

// Zero-extends the dimensions. new_n_in/new_n_out must not cut off entries.
SparseOperator padded(const SparseOperator& T, std::int64_t new_n_in,
                      std::int64_t new_n_out);

// Matrix of the dilation that repeats each of n_in entries m times.
SparseOperator dilation_up_operator(std::int64_t n_in, std::int64_t m);

// Matrix of the dilation that averages blocks of m entries (final partial
// block averaged over m with implicit zeros).
SparseOperator dilation_down_operator(std::int64_t n_in, std::int64_t m);

// Matrix sending a profile vector back to original positions with signs:
// row source_index(s) has entry (s, sign(s)).
SparseOperator from_profile_operator(const SortedProfile& p);

// Matrix sending a sequence to its profile: row s has entry
// (source_index(s), sign(s)).
SparseOperator to_profile_operator(const SortedProfile& p);

}  // namespace orbit
