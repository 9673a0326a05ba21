// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbit {

// Exact rational scalar. Always kept in canonical form: lowest terms,
// positive denominator.
using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Builds a canonical rational from an integer pair. Throws on zero
// denominator.
Rat make_rat(long num, long den = 1);

// Accepts "3", "-7", "p/q" and finite decimals such as "0.25".
// Rejects everything else (exponents, infinite precision markers, q = 0).
Rat parse_rat(const std::string& text);

// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

// Largest integer <= value, as a machine integer. Throws if it does not fit.
std::int64_t rat_floor(const Rat& value);

// value^e for a non-negative integer exponent.
Rat rat_pow(const Rat& value, unsigned long e);

}  // namespace orbit
