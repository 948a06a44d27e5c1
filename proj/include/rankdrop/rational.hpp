#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace rankdrop {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::mpz_int;

/// Exact rational scalar. Always held in canonical form: numerator and
/// denominator coprime, denominator positive. All library arithmetic is
/// exact; there is no floating point anywhere in the computation paths.
using Rat = boost::multiprecision::mpq_rational;

Int numerator(const Rat& q);
Int denominator(const Rat& q);

/// Parse "n" or "n/d" (optional leading '-' on n; d > 0 after
/// canonicalization). Throws Error{ParseError} on malformed input or d = 0.
Rat parse_rat(const std::string& text);

/// Canonical text form: "n" when the denominator is 1, else "n/d" with d > 0.
std::string rat_str(const Rat& q);

/// gcd of |a| and |b|; gcd(0, 0) = 0.
Int int_gcd(const Int& a, const Int& b);

/// Scale a rational vector to the canonical integer representative:
/// entries share no common factor and the first nonzero entry is positive.
/// The zero vector is returned unchanged.
std::vector<Rat> canonical_integer_vector(const std::vector<Rat>& v);

} // namespace rankdrop
