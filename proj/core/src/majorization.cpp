// SPDX-License-Identifier: Apache-2.0

#include "orbit/majorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbit {
namespace {

// suffix[k-1] = sum_{i>=k} profile_i, so tail(k) with 1-based k.
Rat tail_at(const std::vector<Rat>& suffix, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("tail index must be positive");
  if (k > static_cast<std::int64_t>(suffix.size()) - 1) return Rat(0);
  return suffix[static_cast<std::size_t>(k - 1)];
}

std::optional<std::int64_t> criterion_witness(const std::vector<Rat>& tails_a,
                                              const std::vector<Rat>& tails_b,
                                              const Rat& C) {
  const std::int64_t support_a = static_cast<std::int64_t>(tails_a.size()) - 1;
  for (std::int64_t k = 1; k <= support_a; ++k) {
    std::int64_t start = rat_floor(k / C);
    if (start < 1) start = 1;
    if (tail_at(tails_a, k) > C * tail_at(tails_b, start)) return k;
  }
  return std::nullopt;
}

}  // namespace

OrbitVerdict check_tail_domination(const FiniteSequence& a,
                                   const FiniteSequence& b) {
  OrbitVerdict v = check_orbit_criterion(a, b, Rat(1));
  return v;
}

OrbitVerdict check_orbit_criterion(const FiniteSequence& a,
                                   const FiniteSequence& b, const Rat& C) {
  if (C <= 0) throw std::invalid_argument("constant must be positive");
  const std::vector<Rat> tails_a = suffix_sums(rearrange(a).profile());
  const std::vector<Rat> tails_b = suffix_sums(rearrange(b).profile());
  OrbitVerdict v;
  v.constant = C;
  if (auto k = criterion_witness(tails_a, tails_b, C)) {
    v.holds = false;
    v.witness_k = *k;
  }
  return v;
}

std::optional<ConstantInterval> orbit_constant(const FiniteSequence& a,
                                               const FiniteSequence& b,
                                               const Rat& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  if (a.is_zero()) return ConstantInterval{Rat(0), Rat(0)};
  if (b.is_zero()) return std::nullopt;

  const std::vector<Rat> tails_a = suffix_sums(rearrange(a).profile());
  const std::vector<Rat> tails_b = suffix_sums(rearrange(b).profile());
  auto holds = [&](const Rat& C) {
    return !criterion_witness(tails_a, tails_b, C).has_value();
  };

  // Once C * tail_b(1) covers tail_a(1) with the start index clamped to 1,
  // the criterion holds, so the doubling search below always terminates for
  // nonzero b; the cap is a defensive guard.
  const Rat smallest_tail = tails_b[tails_b.size() - 2];
  const Rat cap = 2 * tail_at(tails_a, 1) * (1 + Rat(l0_norm(a))) / smallest_tail;

  Rat hi(1);
  while (!holds(hi)) {
    hi *= 2;
    if (hi > cap && hi > 1) return std::nullopt;
  }
  Rat lo = hi / 2;
  while (holds(lo)) {
    if (lo <= precision) return ConstantInterval{Rat(0), lo};
    lo /= 2;
  }
  while (hi - lo > precision) {
    Rat mid = (lo + hi) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  return ConstantInterval{lo, hi};
}

std::optional<Rat> k_orbit_constant(const FiniteSequence& a,
                                    const FiniteSequence& b) {
  if (a.is_zero()) return Rat(0);
  if (b.is_zero()) return std::nullopt;

  const PiecewiseLinearConcave ka = k_functional(a);
  const PiecewiseLinearConcave kb = k_functional(b);

  // Near zero both functions are linear through the origin and the ratio is
  // constant; past the last breakpoint both are flat. In between, the ratio
  // is monotone on every common cell, so breakpoints carry the supremum.
  Rat best = ka.initial_slope() / kb.initial_slope();
  best = std::max(best, Rat(ka.flat_value() / kb.flat_value()));
  for (const auto& cuts : {ka.breakpoints(), kb.breakpoints()}) {
    for (const Rat& s : cuts)
      best = std::max(best, Rat(ka.value(s) / kb.value(s)));
  }
  return best;
}

OrbitVerdict e_orbit_check(const FiniteSequence& a, const FiniteSequence& b,
                           const Rat& C) {
  if (C <= 0) throw std::invalid_argument("constant must be positive");
  OrbitVerdict v;
  v.constant = C;

  const std::vector<Rat> tails_a = suffix_sums(rearrange(a).profile());
  const std::vector<Rat> tails_b = suffix_sums(rearrange(b).profile());

  // Jump points of t -> E(t, a) and t -> C * E(t/C, b).
  std::vector<Rat> grid = {Rat(0)};
  for (std::int64_t j = 1; j < static_cast<std::int64_t>(tails_a.size()); ++j)
    grid.push_back(Rat(j));
  for (std::int64_t j = 1; j < static_cast<std::int64_t>(tails_b.size()); ++j)
    grid.push_back(C * j);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Rat> samples;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    samples.push_back((grid[i] + grid[i + 1]) / 2);
  samples.push_back(grid.back() + 1);

  for (const Rat& t : samples) {
    const Rat lhs = tail_at(tails_a, rat_floor(t) + 1);
    const Rat rhs = C * tail_at(tails_b, rat_floor(t / C) + 1);
    if (lhs > rhs) {
      v.holds = false;
      v.witness_k = rat_floor(t) + 1;
      return v;
    }
  }
  return v;
}

}  // namespace orbit
