#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace enumstat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds n/d in lowest terms.
[[nodiscard]] Rational make_rational(const Integer& num, const Integer& den = 1);

[[nodiscard]] bool is_integer(const Rational& q);

/// "n" for integers, "n/d" otherwise.
[[nodiscard]] std::string to_string(const Integer& z);
[[nodiscard]] std::string to_string(const Rational& q);

/// Parses "[-]digits" or "[-]digits/digits". Throws ParseError on anything else
/// or a zero denominator.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Parses a plain decimal such as "-1.079" or "2473.234" exactly.
[[nodiscard]] Rational parse_decimal(std::string_view text);

/// q^k for a non-negative machine exponent.
[[nodiscard]] Rational pow(const Rational& q, unsigned long k);

/// Exact q^e for an integer exponent e (possibly negative).
/// Throws DomainError for 0 raised to a negative power.
[[nodiscard]] Rational pow(const Rational& q, const Integer& e);

}  // namespace enumstat
