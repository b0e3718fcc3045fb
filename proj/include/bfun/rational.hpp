#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace bfun {

using Integer = mpz_class;
/// mpq_class keeps values canonical: lowest terms, positive denominator,
/// zero represented as 0/1.
using Rational = mpq_class;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "n", "-n", "n/d". Throws InvalidArgument on malformed text or d = 0.
Rational parse_rational(std::string_view text);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

/// Gcd of the numerators (non-negative); zero when every value is zero.
Integer numerator_gcd(std::span<const Rational> values);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace bfun
