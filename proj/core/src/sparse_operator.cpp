// SPDX-License-Identifier: Apache-2.0

#include "orbit/sparse_operator.hpp"

#include <map>
#include <stdexcept>

namespace orbit {

SparseOperator::SparseOperator(std::int64_t n_in, std::int64_t n_out)
    : n_in_(n_in), n_out_(n_out) {
  if (n_in < 0 || n_out < 0) throw std::invalid_argument("negative dimension");
  rows_.resize(static_cast<std::size_t>(n_out));
}

SparseOperator SparseOperator::identity(std::int64_t n) {
  SparseOperator T(n, n);
  for (std::int64_t i = 1; i <= n; ++i) T.add(i, i, Rat(1));
  return T;
}

SparseOperator SparseOperator::from_rows(
    std::int64_t n_in, std::int64_t n_out,
    std::vector<std::vector<OperatorEntry>> rows) {
  if (static_cast<std::int64_t>(rows.size()) != n_out)
    throw std::invalid_argument("row count mismatch");
  SparseOperator T(n_in, n_out);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const OperatorEntry& e : rows[r])
      T.add(static_cast<std::int64_t>(r) + 1, e.in, e.coeff);
  }
  return T;
}

void SparseOperator::add(std::int64_t out, std::int64_t in, Rat coeff) {
  if (out < 1 || out > n_out_ || in < 1 || in > n_in_)
    throw std::invalid_argument("entry out of range");
  if (coeff == 0) return;
  auto& row = rows_[static_cast<std::size_t>(out - 1)];
  for (const OperatorEntry& e : row) {
    if (e.in == in) throw std::invalid_argument("duplicate entry");
  }
  row.push_back({in, std::move(coeff)});
}

std::int64_t SparseOperator::entry_count() const {
  std::int64_t n = 0;
  for (const auto& row : rows_) n += static_cast<std::int64_t>(row.size());
  return n;
}

FiniteSequence apply(const SparseOperator& T, const FiniteSequence& x) {
  if (x.length() > T.n_in())
    throw std::invalid_argument("input longer than operator domain");
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(T.n_out()));
  for (const auto& row : T.rows()) {
    Rat sum(0);
    for (const OperatorEntry& e : row) sum += e.coeff * x.at(e.in);
    out.push_back(std::move(sum));
  }
  return FiniteSequence(std::move(out));
}

SparseOperator compose(const SparseOperator& S, const SparseOperator& T) {
  if (S.n_in() != T.n_out())
    throw std::invalid_argument("composition dimension mismatch");
  SparseOperator R(T.n_in(), S.n_out());
  for (std::int64_t out = 1; out <= S.n_out(); ++out) {
    std::map<std::int64_t, Rat> acc;
    for (const OperatorEntry& mid : S.rows()[static_cast<std::size_t>(out - 1)]) {
      for (const OperatorEntry& e :
           T.rows()[static_cast<std::size_t>(mid.in - 1)]) {
        acc[e.in] += mid.coeff * e.coeff;
      }
    }
    for (auto& [in, coeff] : acc) R.add(out, in, std::move(coeff));
  }
  return R;
}

Rat l1_operator_norm(const SparseOperator& T) {
  std::map<std::int64_t, Rat> col_sums;
  for (const auto& row : T.rows()) {
    for (const OperatorEntry& e : row) col_sums[e.in] += abs(e.coeff);
  }
  Rat best(0);
  for (const auto& [in, sum] : col_sums) best = std::max(best, sum);
  return best;
}

std::int64_t l0_expansion_bound(const SparseOperator& T) {
  std::map<std::int64_t, std::int64_t> col_counts;
  for (const auto& row : T.rows()) {
    for (const OperatorEntry& e : row) ++col_counts[e.in];
  }
  std::int64_t best = 0;
  for (const auto& [in, count] : col_counts) best = std::max(best, count);
  return best;
}

SparseOperator padded(const SparseOperator& T, std::int64_t new_n_in,
                      std::int64_t new_n_out) {
  if (new_n_in < T.n_in() || new_n_out < T.n_out()) {
    // Shrinking is allowed only when no stored entry is affected.
    for (std::int64_t out = new_n_out + 1; out <= T.n_out(); ++out) {
      if (!T.rows()[static_cast<std::size_t>(out - 1)].empty())
        throw std::invalid_argument("padding would drop rows");
    }
    for (const auto& row : T.rows()) {
      for (const OperatorEntry& e : row) {
        if (e.in > new_n_in)
          throw std::invalid_argument("padding would drop columns");
      }
    }
  }
  SparseOperator R(new_n_in, new_n_out);
  for (std::int64_t out = 1; out <= std::min(T.n_out(), new_n_out); ++out) {
    for (const OperatorEntry& e : T.rows()[static_cast<std::size_t>(out - 1)])
      R.add(out, e.in, e.coeff);
  }
  return R;
}

SparseOperator dilation_up_operator(std::int64_t n_in, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  SparseOperator T(n_in, n_in * m);
  for (std::int64_t r = 1; r <= n_in * m; ++r) T.add(r, (r - 1) / m + 1, Rat(1));
  return T;
}

SparseOperator dilation_down_operator(std::int64_t n_in, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  const std::int64_t n_out = (n_in + m - 1) / m;
  SparseOperator T(n_in, n_out);
  const Rat w = make_rat(1, m);
  for (std::int64_t r = 1; r <= n_out; ++r) {
    for (std::int64_t i = (r - 1) * m + 1; i <= std::min(r * m, n_in); ++i)
      T.add(r, i, w);
  }
  return T;
}

SparseOperator from_profile_operator(const SortedProfile& p) {
  SparseOperator T(p.size(), p.original_length());
  for (std::int64_t s = 1; s <= p.size(); ++s) {
    const RecoverSlot& slot = p.recover()[static_cast<std::size_t>(s - 1)];
    T.add(slot.source_index, s, Rat(slot.sign));
  }
  return T;
}

SparseOperator to_profile_operator(const SortedProfile& p) {
  SparseOperator T(p.original_length(), p.size());
  for (std::int64_t s = 1; s <= p.size(); ++s) {
    const RecoverSlot& slot = p.recover()[static_cast<std::size_t>(s - 1)];
    T.add(s, slot.source_index, Rat(slot.sign));
  }
  return T;
}

}  // namespace orbit
