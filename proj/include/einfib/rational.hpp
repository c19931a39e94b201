#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace einfib {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p/q" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms; mpq_class(num, den) alone is not canonical.
Rational fraction(const Integer& num, const Integer& den);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

int sign(const Rational& value);

Integer floor(const Rational& value);

/// Rounds half away from zero.
Integer round_half_away(const Rational& value);

Rational power(const Rational& base, unsigned exponent);

/// Fixed-point rendering of an exact rational with `digits` decimals.
std::string to_decimal(const Rational& value, int digits);

/// Largest s with s*s | n, for n > 0. Returns {square part root, square-free part}.
std::pair<Integer, Integer> split_square(const Integer& n);

bool is_perfect_square(const Rational& value);

/// Exact square root of a perfect-square rational.
Rational exact_sqrt(const Rational& value);

}  // namespace einfib
