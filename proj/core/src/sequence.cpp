// SPDX-License-Identifier: Apache-2.0

#include "orbit/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace orbit {

FiniteSequence::FiniteSequence(std::vector<Rat> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

Rat FiniteSequence::at(std::int64_t index) const {
  if (index < 1) throw std::invalid_argument("index must be positive");
  if (index > length()) return Rat(0);
  return values_[static_cast<std::size_t>(index - 1)];
}

std::ostream& operator<<(std::ostream& os, const FiniteSequence& x) {
  os << "(";
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(x.values()[i]);
  }
  return os << ")";
}

std::int64_t l0_norm(const FiniteSequence& x) {
  return std::count_if(x.values().begin(), x.values().end(),
                       [](const Rat& v) { return v != 0; });
}

Rat l1_norm(const FiniteSequence& x) {
  Rat sum(0);
  for (const Rat& v : x.values()) sum += abs(v);
  return sum;
}

SortedProfile::SortedProfile(std::vector<Rat> profile,
                             std::vector<RecoverSlot> recover,
                             std::int64_t original_length)
    : profile_(std::move(profile)),
      recover_(std::move(recover)),
      original_length_(original_length) {
  if (profile_.size() != recover_.size())
    throw std::invalid_argument("profile/recover size mismatch");
}

Rat SortedProfile::entry(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("index must be positive");
  if (k > size()) return Rat(0);
  return profile_[static_cast<std::size_t>(k - 1)];
}

FiniteSequence SortedProfile::reconstruct() const {
  std::vector<Rat> values(static_cast<std::size_t>(original_length_), Rat(0));
  for (std::size_t s = 0; s < profile_.size(); ++s) {
    const RecoverSlot& slot = recover_[s];
    values[static_cast<std::size_t>(slot.source_index - 1)] =
        slot.sign >= 0 ? profile_[s] : -profile_[s];
  }
  return FiniteSequence(std::move(values));
}

SortedProfile rearrange(const FiniteSequence& x) {
  std::vector<std::int64_t> order;
  for (std::int64_t i = 1; i <= x.length(); ++i) {
    if (x.at(i) != 0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&x](std::int64_t i, std::int64_t j) {
                     return abs(x.at(i)) > abs(x.at(j));
                   });
  std::vector<Rat> profile;
  std::vector<RecoverSlot> recover;
  profile.reserve(order.size());
  recover.reserve(order.size());
  for (std::int64_t i : order) {
    Rat v = x.at(i);
    profile.push_back(abs(v));
    recover.push_back({i, v > 0 ? 1 : -1});
  }
  return SortedProfile(std::move(profile), std::move(recover), x.length());
}

Rat tail_sum(const SortedProfile& p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("tail index must be positive");
  Rat sum(0);
  for (std::int64_t i = k; i <= p.size(); ++i) sum += p.entry(i);
  return sum;
}

std::vector<Rat> suffix_sums(const std::vector<Rat>& values) {
  std::vector<Rat> suffix(values.size() + 1, Rat(0));
  for (std::size_t i = values.size(); i-- > 0;)
    suffix[i] = values[i] + suffix[i + 1];
  return suffix;
}

FiniteSequence dilate_up(const FiniteSequence& x, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(x.length() * m));
  for (const Rat& v : x.values()) {
    for (std::int64_t r = 0; r < m; ++r) out.push_back(v);
  }
  return FiniteSequence(std::move(out));
}

FiniteSequence dilate_down(const FiniteSequence& x, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  std::vector<Rat> out;
  const std::int64_t blocks = (x.length() + m - 1) / m;
  out.reserve(static_cast<std::size_t>(blocks));
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    Rat sum(0);
    for (std::int64_t r = 1; r <= m; ++r) sum += x.at(blk * m + r);
    out.push_back(sum / m);
  }
  return FiniteSequence(std::move(out));
}

FiniteSequence add(const FiniteSequence& a, const FiniteSequence& b) {
  const std::int64_t n = std::max(a.length(), b.length());
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) out.push_back(a.at(i) + b.at(i));
  return FiniteSequence(std::move(out));
}

FiniteSequence scale(const FiniteSequence& x, const Rat& c) {
  std::vector<Rat> out;
  out.reserve(x.values().size());
  for (const Rat& v : x.values()) out.push_back(v * c);
  return FiniteSequence(std::move(out));
}

}  // namespace orbit
