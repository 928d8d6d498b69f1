#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qpos {

using Integer = mpz_class;

/// Exact fraction. gmpxx keeps results of arithmetic in lowest terms with a
/// positive denominator; values built from raw parts go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& x);

/// Smallest integer >= x.
Integer ceil(const Rational& x);

/// "p" for integers, "p/q" otherwise. Never a decimal.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "p", "p/q" and the half-integer decimals "d.5" / "d.0".
/// Any other decimal is rejected with DomainError.
Rational parse_rational(std::string_view text);

/// Narrowing conversion; throws DomainError when x does not fit.
std::int64_t to_int64(const Integer& x);

} // namespace qpos
