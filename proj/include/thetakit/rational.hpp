#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thetakit {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "7", "-3", "2/3" or "10/-4" (normalized on return).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms; throws std::invalid_argument for den = 0.
Rational ratio(long num, long den);

/// "2/3", "-5", "0".
std::string to_string(const Rational& r);

/// Integer-valued rationals only; throws std::domain_error otherwise.
long to_long(const Rational& r);

} // namespace thetakit
