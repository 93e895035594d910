#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nsarith {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

Integer floor(const Rational& q);

/// Floor division with a nonnegative remainder for d > 0.
Integer floor_div(const Integer& n, const Integer& d);
Integer floor_mod(const Integer& n, const Integer& d);

/// The exact k-th root of q when q is a k-th power in Q, otherwise nullopt.
/// Negative q has a root only for odd k.
std::optional<Rational> exact_root(const Rational& q, unsigned long k);

}  // namespace nsarith
