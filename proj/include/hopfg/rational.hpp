#pragma once

#include <gmpxx.h>

#include <string>

#include "hopfg/errors.hpp"

namespace hopfg {

using Int = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a", "a/b". Throws SchemaError on malformed input or zero
// denominator. Result is canonicalized (b > 0, gcd(a,b) = 1).
Rational parse_rational(const std::string& s);

// "a" if integral, else "a/b".
std::string rational_str(const Rational& r);

// Numerator / denominator as long, throwing if they do not fit. The library
// only needs this for exponent bookkeeping where values are tiny.
long to_long(const Int& z);

}  // namespace hopfg
