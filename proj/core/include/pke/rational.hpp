#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pke {

/// Exact coefficient field. mpq_class keeps numerator/denominator reduced
/// with a positive denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses decimal numerator and denominator strings.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational make_rational(std::string_view num, std::string_view den = "1");

/// Parses "a", "-a", "a/b" (whitespace tolerated around the slash).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string numerator_string(const Rational& value);
std::string denominator_string(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

/// Exact rational q-th root. For even q the non-negative root is returned;
/// for odd q the real root carries the sign of the argument.
std::optional<Rational> exact_root(const Rational& value, unsigned q);

int sign(const Rational& value);

}  // namespace pke
