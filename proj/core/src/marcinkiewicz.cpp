// SPDX-License-Identifier: Apache-2.0

#include "orbit/marcinkiewicz.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbit {

WeightFamily WeightFamily::power(const Rat& p) {
  if (p <= 0 || p >= 1)
    throw std::invalid_argument("power parameter must lie in (0, 1)");
  if (p.get_num() != 1 || !p.get_den().fits_ulong_p())
    throw std::invalid_argument("1/p must be an integer for exact weights");
  WeightFamily w;
  w.kind_ = Kind::Power;
  w.q_ = p.get_den().get_ui();
  w.r1_ = rat_pow(Rat(2), w.q_);
  w.r2_ = make_rat(static_cast<long>(w.q_), static_cast<long>(w.q_) - 1);
  return w;
}

WeightFamily WeightFamily::telescoping_quadratic() {
  WeightFamily w;
  w.kind_ = Kind::TelescopingQuadratic;
  w.r1_ = Rat(4);
  w.r2_ = Rat(2);
  return w;
}

WeightFamily WeightFamily::pairwise(std::vector<Rat> alpha,
                                    std::vector<Rat> beta) {
  if (alpha.size() < 2 || alpha.size() != beta.size())
    throw std::invalid_argument("weight tables need equal length >= 2");
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] <= 0 || beta[k] <= 0)
      throw std::invalid_argument("weight tables must be positive");
    if (k > 0 && alpha[k] < alpha[k - 1])
      throw std::invalid_argument("alpha must be nondecreasing");
  }
  // beta must telescope against alpha: beta_k - beta_{k+1} = 1/alpha_k, and
  // the last entry must at least cover its own reciprocal.
  for (std::size_t k = 0; k + 1 < alpha.size(); ++k) {
    if (beta[k] - beta[k + 1] != 1 / alpha[k])
      throw std::invalid_argument("beta is not the tail table of alpha");
  }
  if (beta.back() < 1 / alpha.back())
    throw std::invalid_argument("beta tail too small");

  WeightFamily w;
  w.kind_ = Kind::Pairwise;
  w.alpha_table_ = std::move(alpha);
  w.beta_table_ = std::move(beta);

  const std::int64_t n = static_cast<std::int64_t>(w.alpha_table_.size());
  w.r1_ = Rat(1);
  for (std::int64_t k = 1; 2 * k <= n; ++k)
    w.r1_ = std::max(w.r1_, Rat(w.alpha(2 * k) / w.alpha(k)));
  w.r2_ = Rat(0);
  for (std::int64_t k = 1; k <= n; ++k)
    w.r2_ = std::max(w.r2_, Rat(w.beta_table_[static_cast<std::size_t>(k - 1)] *
                                w.alpha(k) / k));
  return w;
}

std::optional<std::int64_t> WeightFamily::horizon() const {
  if (kind_ != Kind::Pairwise) return std::nullopt;
  return static_cast<std::int64_t>(alpha_table_.size());
}

Rat WeightFamily::alpha(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("weight index must be positive");
  switch (kind_) {
    case Kind::Power:
      return rat_pow(Rat(k), q_);
    case Kind::TelescopingQuadratic:
      return Rat(k) * Rat(k + 1);
    case Kind::Pairwise:
      if (k > static_cast<std::int64_t>(alpha_table_.size()))
        throw std::out_of_range("alpha index past table horizon");
      return alpha_table_[static_cast<std::size_t>(k - 1)];
  }
  throw std::logic_error("unreachable");
}

Rat WeightFamily::beta_lower(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("weight index must be positive");
  switch (kind_) {
    case Kind::Power:
      // integral comparison: beta_k >= k^{1-q} / (q-1)
      return 1 / (Rat(static_cast<long>(q_) - 1) * rat_pow(Rat(k), q_ - 1));
    case Kind::TelescopingQuadratic:
      return make_rat(1, k);
    case Kind::Pairwise:
      if (k > static_cast<std::int64_t>(beta_table_.size()))
        throw std::out_of_range("beta index past table horizon");
      return beta_table_[static_cast<std::size_t>(k - 1)];
  }
  throw std::logic_error("unreachable");
}

Rat WeightFamily::beta_upper(std::int64_t k) const {
  if (kind_ == Kind::Power)
    return Rat(static_cast<long>(q_)) * beta_lower(k);
  return beta_lower(k);
}

Rat WeightFamily::p() const {
  if (kind_ != Kind::Power) throw std::logic_error("not a power family");
  return make_rat(1, static_cast<long>(q_));
}

Rat norm_alpha(const FiniteSequence& x, const WeightFamily& w) {
  const SortedProfile px = rearrange(x);
  Rat best(0);
  for (std::int64_t k = 1; k <= px.size(); ++k)
    best = std::max(best, Rat(w.alpha(k) * px.entry(k)));
  return best;
}

NormInterval equiv_norm(const FiniteSequence& x, const WeightFamily& w) {
  const std::vector<Rat> tails = suffix_sums(rearrange(x).profile());
  NormInterval interval{Rat(0), Rat(0)};
  const std::int64_t support = static_cast<std::int64_t>(tails.size()) - 1;
  for (std::int64_t k = 1; k <= support; ++k) {
    const Rat& tail = tails[static_cast<std::size_t>(k - 1)];
    interval.lo = std::max(interval.lo, Rat(tail / w.beta_upper(k)));
    interval.hi = std::max(interval.hi, Rat(tail / w.beta_lower(k)));
  }
  return interval;
}

OrbitVerdict check_doubling(const WeightFamily& w, std::int64_t horizon) {
  OrbitVerdict v;
  v.constant = w.r1();
  if (auto h = w.horizon()) horizon = std::min(horizon, *h / 2);
  for (std::int64_t k = 1; k <= horizon; ++k) {
    if (w.alpha(2 * k) > w.r1() * w.alpha(k)) {
      v.holds = false;
      v.witness_k = k;
      return v;
    }
  }
  return v;
}

OrbitVerdict check_tail_condition(const WeightFamily& w, std::int64_t horizon) {
  OrbitVerdict v;
  v.constant = w.r2();
  if (auto h = w.horizon()) horizon = std::min(horizon, *h);
  for (std::int64_t k = 1; k <= horizon; ++k) {
    if (w.beta_upper(k) > w.r2() * k / w.alpha(k)) {
      v.holds = false;
      v.witness_k = k;
      return v;
    }
  }
  return v;
}

SandwichReport sandwich_check(const FiniteSequence& x, const WeightFamily& w) {
  SandwichReport report;
  report.alpha_norm = norm_alpha(x, w);
  report.equiv = equiv_norm(x, w);
  report.beta_exact = w.beta_exact();
  report.left_factor = 1 / (w.r1() * w.r1() * w.r2());
  report.left_holds = report.left_factor * report.alpha_norm <= report.equiv.lo;
  const Rat& right_side = report.beta_exact ? report.equiv.hi : report.equiv.lo;
  report.right_holds = right_side <= report.alpha_norm;
  return report;
}

}  // namespace orbit
