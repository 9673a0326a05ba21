// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "orbit/sequence.hpp"

namespace orbit {

struct EnvelopeSegment {
  Rat slope;
  Rat intercept;

  Rat value(const Rat& t) const { return slope * t + intercept; }
  bool operator==(const EnvelopeSegment&) const = default;
};

// Piecewise linear concave function on [0, inf). Segment i applies between
// breakpoints()[i-1] and breakpoints()[i] (with 0 and infinity at the ends);
// slopes decrease strictly from segment to segment.
class PiecewiseLinearConcave {
 public:
  // Lower envelope of a finite set of lines. At least one line required.
  static PiecewiseLinearConcave lower_envelope(std::vector<EnvelopeSegment> lines);

  const std::vector<EnvelopeSegment>& segments() const { return segments_; }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }

  Rat value(const Rat& t) const;
  Rat initial_slope() const { return segments_.front().slope; }
  Rat flat_value() const { return segments_.back().intercept; }

 private:
  std::vector<EnvelopeSegment> segments_;
  std::vector<Rat> breakpoints_;
};

// Smallest l1 mass left outside the floor(t) largest entries:
// sum of profile entries with index >= floor(t) + 1. Requires t >= 0.
Rat e_functional(const FiniteSequence& x, const Rat& t);

// Exact closed form of inf { l0(x0) + t * l1(x1) : x = x0 + x1 } as the
// lower envelope of the lines k + t * tail(k+1), k = 0..l0(x).
PiecewiseLinearConcave k_functional(const FiniteSequence& x);
Rat k_eval(const FiniteSequence& x, const Rat& t);

// sup_{s>0} (k_eval(x, s) - t) / s, clamped at 0. The supremum is attained
// on the envelope breakpoints or in the flat limits, so it is exact.
Rat e_star(const FiniteSequence& x, const Rat& t);

}  // namespace orbit
