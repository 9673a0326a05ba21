// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "orbit/rational.hpp"

namespace orbit {

// A finitely supported sequence. Entries past length() are implicitly zero;
// trailing zeros are trimmed on construction so equal sequences compare
// equal. Indices in the public API are 1-based.
class FiniteSequence {
 public:
  FiniteSequence() = default;
  explicit FiniteSequence(std::vector<Rat> values);

  const std::vector<Rat>& values() const { return values_; }
  std::int64_t length() const { return static_cast<std::int64_t>(values_.size()); }
  Rat at(std::int64_t index) const;  // 1-based, zero past the end
  bool is_zero() const { return values_.empty(); }

  bool operator==(const FiniteSequence&) const = default;

 private:
  std::vector<Rat> values_;
};

std::ostream& operator<<(std::ostream& os, const FiniteSequence& x);

std::int64_t l0_norm(const FiniteSequence& x);  // support cardinality
Rat l1_norm(const FiniteSequence& x);

struct RecoverSlot {
  std::int64_t source_index;  // 1-based position in the original sequence
  int sign;                   // +1 or -1

  bool operator==(const RecoverSlot&) const = default;
};

// Nonincreasing rearrangement of the absolute values, together with the
// signed slot map that reproduces the original sequence exactly.
class SortedProfile {
 public:
  SortedProfile() = default;
  SortedProfile(std::vector<Rat> profile, std::vector<RecoverSlot> recover,
                std::int64_t original_length);

  // Entries are strictly positive and nonincreasing.
  const std::vector<Rat>& profile() const { return profile_; }
  const std::vector<RecoverSlot>& recover() const { return recover_; }
  std::int64_t size() const { return static_cast<std::int64_t>(profile_.size()); }
  std::int64_t original_length() const { return original_length_; }

  Rat entry(std::int64_t k) const;  // 1-based, zero past the end
  FiniteSequence reconstruct() const;

 private:
  std::vector<Rat> profile_;
  std::vector<RecoverSlot> recover_;
  std::int64_t original_length_ = 0;
};

// Stable: ties in absolute value keep ascending original index.
SortedProfile rearrange(const FiniteSequence& x);

// Sum of profile entries with index >= k (1-based); zero when k exceeds the
// profile length.
Rat tail_sum(const SortedProfile& p, std::int64_t k);

// suffix[i] = values[i] + values[i+1] + ... (0-based; suffix[size()] = 0).
std::vector<Rat> suffix_sums(const std::vector<Rat>& values);

// Repeats every entry m times: (x1, x1, ..., x2, x2, ...).
FiniteSequence dilate_up(const FiniteSequence& x, std::int64_t m);

// Averages consecutive blocks of m entries; the final partial block is
// padded with zeros.
FiniteSequence dilate_down(const FiniteSequence& x, std::int64_t m);

FiniteSequence add(const FiniteSequence& a, const FiniteSequence& b);
FiniteSequence scale(const FiniteSequence& x, const Rat& c);

}  // namespace orbit
