// SPDX-License-Identifier: Apache-2.0

#include "orbit/rational.hpp"

#include <cctype>

namespace orbit {
namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  std::string s = text;
  std::string sign;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') sign = "-";
    s = s.substr(1);
  }
  if (s.empty()) throw ParseError("empty number: '" + text + "'");

  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos && dot != std::string::npos)
    throw ParseError("malformed number: '" + text + "'");

  Rat result;
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction: '" + text + "'");
    // base 10 must be explicit: the default base detection would read a
    // leading zero as octal
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    result = Rat(n) / Rat(d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal: '" + text + "'");
    mpz_class n(whole + frac, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    result = Rat(n) / Rat(d);
  } else {
    if (!all_digits(s)) throw ParseError("malformed integer: '" + text + "'");
    result = Rat(mpz_class(s, 10));
  }
  if (sign == "-") result = -result;
  result.canonicalize();
  return result;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::int64_t rat_floor(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor does not fit");
  return q.get_si();
}

Rat rat_pow(const Rat& value, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), value.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), value.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace orbit
