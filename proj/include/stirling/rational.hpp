#pragma once

#include <gmpxx.h>

#include <string>

namespace stirling {

// Arbitrary-precision signed rational, always canonical: positive
// denominator, gcd(|num|, den) = 1.  GMP keeps mpq_class in that form
// after every operation, so the invariant holds by construction.
using ExactRational = mpq_class;
using ExactInteger = mpz_class;

// C(n, k); returns 0 when k > n.
ExactRational binomial(unsigned long n, unsigned long k);

ExactInteger factorial_int(unsigned long n);

// base^e for any integer e (negative allowed; base must be nonzero then).
ExactRational pow_rational(const ExactRational& base, long e);

// Parses "p/q" or a plain integer / decimal literal into an exact rational.
ExactRational parse_rational(const std::string& text);

std::string to_string(const ExactRational& q);

}  // namespace stirling
