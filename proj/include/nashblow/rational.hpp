#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nashblow {

/// Exact rational numbers backed by GMP. mpq_class keeps values canonical
/// (coprime numerator/denominator, positive denominator, zero as 0/1) as long
/// as every value is produced by arithmetic or passed through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses an unsigned decimal literal.
inline Integer parse_uint(std::string_view digits) {
  if (digits.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  Integer z;
  if (z.set_str(std::string(digits), 10) != 0) {
    throw std::invalid_argument("bad integer literal: " + std::string(digits));
  }
  return z;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace nashblow
