#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pairscheme {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps values canonical: lowest terms,
/// denominator >= 1. All arithmetic below preserves that invariant.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace pairscheme
