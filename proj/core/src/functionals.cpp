// SPDX-License-Identifier: Apache-2.0

#include "orbit/functionals.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbit {

PiecewiseLinearConcave PiecewiseLinearConcave::lower_envelope(
    std::vector<EnvelopeSegment> lines) {
  if (lines.empty()) throw std::invalid_argument("no lines");
  std::stable_sort(lines.begin(), lines.end(),
                   [](const EnvelopeSegment& a, const EnvelopeSegment& b) {
                     return a.slope > b.slope;
                   });

  // Of parallel lines only the lowest can contribute.
  std::vector<EnvelopeSegment> pruned;
  for (const EnvelopeSegment& line : lines) {
    if (!pruned.empty() && pruned.back().slope == line.slope) {
      if (line.intercept < pruned.back().intercept) pruned.back() = line;
    } else {
      pruned.push_back(line);
    }
  }

  // Steepest line first; a new, flatter line enters the envelope where it
  // crosses the current top. If that crossing is not to the right of the
  // previous one, the top line never attains the minimum and is dropped.
  std::vector<EnvelopeSegment> hull;
  std::vector<Rat> cuts;
  for (const EnvelopeSegment& line : pruned) {
    while (!hull.empty()) {
      const EnvelopeSegment& top = hull.back();
      if (line.intercept <= top.intercept) {
        // line is below top everywhere on [0, inf)
        hull.pop_back();
        if (!cuts.empty()) cuts.pop_back();
        continue;
      }
      Rat cross = (line.intercept - top.intercept) / (top.slope - line.slope);
      if (!cuts.empty() && cross <= cuts.back()) {
        hull.pop_back();
        cuts.pop_back();
        continue;
      }
      hull.push_back(line);
      cuts.push_back(cross);
      break;
    }
    if (hull.empty()) hull.push_back(line);
  }

  PiecewiseLinearConcave f;
  f.segments_ = std::move(hull);
  f.breakpoints_ = std::move(cuts);
  return f;
}

Rat PiecewiseLinearConcave::value(const Rat& t) const {
  if (t < 0) throw std::invalid_argument("negative argument");
  std::size_t idx = static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t) -
      breakpoints_.begin());
  return segments_[idx].value(t);
}

Rat e_functional(const FiniteSequence& x, const Rat& t) {
  if (t < 0) throw std::invalid_argument("negative argument");
  return tail_sum(rearrange(x), rat_floor(t) + 1);
}

PiecewiseLinearConcave k_functional(const FiniteSequence& x) {
  const SortedProfile p = rearrange(x);
  const std::vector<Rat> tails = suffix_sums(p.profile());
  std::vector<EnvelopeSegment> lines;
  lines.reserve(tails.size());
  for (std::size_t k = 0; k < tails.size(); ++k)
    lines.push_back({tails[k], Rat(static_cast<long>(k))});
  return PiecewiseLinearConcave::lower_envelope(std::move(lines));
}

Rat k_eval(const FiniteSequence& x, const Rat& t) {
  return k_functional(x).value(t);
}

Rat e_star(const FiniteSequence& x, const Rat& t) {
  if (t < 0) throw std::invalid_argument("negative argument");
  const PiecewiseLinearConcave k = k_functional(x);
  Rat best(0);
  if (t == 0) best = std::max(best, k.initial_slope());
  for (const Rat& s : k.breakpoints())
    best = std::max(best, Rat((k.value(s) - t) / s));
  return best;
}

}  // namespace orbit
