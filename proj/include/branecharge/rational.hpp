#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace branecharge {

/// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Serializes exactly: "34", "-2.5" when the decimal expansion terminates,
/// otherwise "p/q".
std::string format_rational(const Rational& q);

/// Inverse of format_rational; also accepts plain "p/q" and integers.
/// Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace branecharge
