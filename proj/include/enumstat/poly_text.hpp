#pragma once

#include "enumstat/polynomial.hpp"

#include <string>
#include <string_view>

namespace enumstat {

/// Canonical text for a polynomial.
///
/// Terms are grouped by ascending a-exponent; inside a group they run by
/// descending c-exponent, then descending p-exponent. Factors are written
/// c, p, a (the order the enumerator listing uses), exponent 1 is implicit,
/// a unit coefficient is omitted, and each a-group goes on its own line.
/// The zero polynomial prints as "0".
///
///   c^173*p^24*a^48 +
///   c^2898*p^122*a^58 + c^1859*p^111*a^58
[[nodiscard]] std::string print_canonical(const Polynomial& x);

/// Parses the canonical grammar:
///
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := COEFF | [COEFF '*'] factor ('*' factor)*
///   factor := ('a' | 'p' | 'c') ['^' EXP]
///   COEFF  := INT ['/' INT]
///   EXP    := ['-'] INT ['/' INT]
///
/// Whitespace (including newlines) is insignificant. Repeated monomials are
/// summed. Throws ParseError whose location() is the byte offset of the
/// offending token.
[[nodiscard]] Polynomial parse_polynomial(std::string_view src);

}  // namespace enumstat
