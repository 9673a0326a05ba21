// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "orbit/majorization.hpp"
#include "orbit/sequence.hpp"

namespace orbit {

// Weight family alpha_1 <= alpha_2 <= ... defining the norm
// sup_k alpha_k x*_k, together with two-sided bounds on the reciprocal
// tails beta_k = sum_{i>=k} 1/alpha_i and regularity constants
//   R1: alpha_{2k} <= R1 * alpha_k       (doubling)
//   R2: beta_k <= R2 * k / alpha_k       (tail condition)
class WeightFamily {
 public:
  enum class Kind { Power, TelescopingQuadratic, Pairwise };

  // alpha_k = k^(1/p) for p = 1/q with integer q >= 2 (exactness requires an
  // integer exponent). R1 = 2^q, R2 = q/(q-1); beta bounds by integral
  // comparison.
  static WeightFamily power(const Rat& p);

  // alpha_k = k(k+1); the reciprocals telescope so beta_k = 1/k exactly.
  // R1 = 4, R2 = 2.
  static WeightFamily telescoping_quadratic();

  // Finite user table. beta must be the exact tail table of some extension
  // of alpha: beta_k - beta_{k+1} = 1/alpha_k is validated, as is
  // beta_n >= 1/alpha_n. R1 and R2 are the smallest constants valid on the
  // table horizon.
  static WeightFamily pairwise(std::vector<Rat> alpha, std::vector<Rat> beta);

  Kind kind() const { return kind_; }
  // Table length for pairwise families; nullopt for closed-form families.
  std::optional<std::int64_t> horizon() const;
  bool beta_exact() const { return kind_ != Kind::Power; }

  Rat alpha(std::int64_t k) const;       // throws past the horizon
  Rat beta_lower(std::int64_t k) const;  // beta_lower <= beta_k <= beta_upper
  Rat beta_upper(std::int64_t k) const;
  Rat r1() const { return r1_; }
  Rat r2() const { return r2_; }
  Rat p() const;  // power families only

 private:
  WeightFamily() = default;

  Kind kind_ = Kind::TelescopingQuadratic;
  unsigned long q_ = 0;  // power exponent
  std::vector<Rat> alpha_table_;
  std::vector<Rat> beta_table_;
  Rat r1_;
  Rat r2_;
};

// sup_k alpha_k x*_k over the support of x; 0 for the zero sequence.
Rat norm_alpha(const FiniteSequence& x, const WeightFamily& w);

struct NormInterval {
  Rat lo;
  Rat hi;

  bool operator==(const NormInterval&) const = default;
};

// Encloses sup_k tail_k(x*) / beta_k using the beta bounds; degenerate
// (lo == hi) when beta is exact.
NormInterval equiv_norm(const FiniteSequence& x, const WeightFamily& w);

// alpha_{2k} <= R1 * alpha_k for k = 1..horizon.
OrbitVerdict check_doubling(const WeightFamily& w, std::int64_t horizon);

// beta_upper(k) <= R2 * k / alpha_k for k = 1..horizon.
OrbitVerdict check_tail_condition(const WeightFamily& w, std::int64_t horizon);

struct SandwichReport {
  Rat alpha_norm;
  NormInterval equiv;
  Rat left_factor;   // 1 / (R1^2 R2)
  bool left_holds;   // left_factor * alpha_norm <= equiv.lo
  bool right_holds;  // equiv.hi <= alpha_norm (equiv.lo when beta is inexact)
  bool beta_exact;
  bool holds() const { return left_holds && right_holds; }
};

// Two-sided comparison of the two norms. With inexact beta bounds only the
// conservative side sup tail/beta_upper is provably below alpha_norm, so
// the right-hand check uses equiv.lo in that case (and equiv.hi when beta
// is exact).
SandwichReport sandwich_check(const FiniteSequence& x, const WeightFamily& w);

}  // namespace orbit
