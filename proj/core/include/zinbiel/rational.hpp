#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace zinbiel {

/// Exact rational scalar. GMP keeps every value canonical: lowest terms,
/// positive denominator. All arithmetic is exact; there are no floats
/// anywhere in this library.
using Rational = mpq_class;

/// Builds a canonical rational from an integer pair. Throws
/// std::invalid_argument on a zero denominator.
Rational rational_of(long num, long den = 1);

/// Parses "p" or "p/q" (optionally signed numerator, base 10).
/// Throws std::invalid_argument on anything else, including "p/0".
Rational rational_from_string(const std::string& text);

/// Renders "p" or "p/q"; the denominator is omitted when it is 1.
std::string rational_to_string(const Rational& q);

/// Residue of q modulo a prime p, or nullopt when the denominator
/// vanishes mod p. Result lies in [0, p).
std::optional<std::uint32_t> residue_mod(const Rational& q, std::uint32_t p);

}  // namespace zinbiel
