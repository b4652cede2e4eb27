#pragma once

// Exact scalar types shared by every module. Nothing in this library uses
// floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nccr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Converts an Integer known to fit into a signed 64-bit value.
std::int64_t to_i64(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

}  // namespace nccr
