#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace ergocap {

// All arithmetic in this library is exact. GMP rationals are kept in
// canonical form (reduced, positive denominator) by the backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "n" or "n/d" with d > 0 after reduction. Throws InputError on
// malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical serialization: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

}  // namespace ergocap
