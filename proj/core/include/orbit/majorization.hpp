// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "orbit/functionals.hpp"
#include "orbit/sequence.hpp"

namespace orbit {

struct OrbitVerdict {
  bool holds = true;
  std::optional<std::int64_t> witness_k;  // first failing tail index
  Rat constant;                           // the constant that was tested

  bool operator==(const OrbitVerdict&) const = default;
};

// Tail domination: sum_{i>=k} a*_i <= sum_{i>=k} b*_i for every k.
// Equivalent to the orbit criterion at constant 1.
OrbitVerdict check_tail_domination(const FiniteSequence& a,
                                   const FiniteSequence& b);

// Orbit criterion at constant C > 0:
//   sum_{i>=k} a*_i <= C * sum_{i >= max(1, floor(k/C))} b*_i
// for k = 1..l0(a).
OrbitVerdict check_orbit_criterion(const FiniteSequence& a,
                                   const FiniteSequence& b, const Rat& C);

struct ConstantInterval {
  Rat lo;  // criterion fails here (or 0 when it never fails)
  Rat hi;  // criterion holds here

  bool operator==(const ConstantInterval&) const = default;
};

// Brackets the least constant for which the criterion holds, to the given
// width. The criterion is monotone in C: a larger constant both scales the
// right side up and starts its tail earlier. Returns nullopt when no finite
// constant works (a != 0 while b = 0); returns [0, 0] when a = 0.
std::optional<ConstantInterval> orbit_constant(const FiniteSequence& a,
                                               const FiniteSequence& b,
                                               const Rat& precision);

// sup_{t>0} K(t, a) / K(t, b), exact: the ratio of two concave piecewise
// linear functions through 0 is monotone between breakpoints. nullopt when
// the ratio is unbounded (b = 0 while a != 0); 0 when a = 0.
std::optional<Rat> k_orbit_constant(const FiniteSequence& a,
                                    const FiniteSequence& b);

// E(t, a) <= C * E(t/C, b) for all t > 0, verified exactly by sampling
// midpoints between consecutive jumps of the two step functions. On
// failure witness_k = floor(t) + 1 for the failing t, i.e. the tail index
// where E(t, a) starts.
OrbitVerdict e_orbit_check(const FiniteSequence& a, const FiniteSequence& b,
                           const Rat& C);

}  // namespace orbit
