#pragma once

// Exact rational arithmetic. Every coefficient in the library is a Rational;
// GMP keeps values canonical (lowest terms, positive denominator) after each
// operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gspec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Text form "a" or "a/b" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned exp);

}  // namespace gspec
