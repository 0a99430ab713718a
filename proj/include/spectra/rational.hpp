#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectra {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" or a plain decimal like "1.25" into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Canonical serialization: "p" for integers, "p/q" otherwise.
std::string rational_str(const Rational& q);

Rational rational_pow(const Rational& base, long exp);

// Exact n-th root of an integer if it exists (n >= 1).
std::optional<Integer> integer_nth_root(const Integer& v, unsigned long n);

// Exact n-th root of a rational if it exists. For even n the input must be
// nonnegative and the positive root is returned.
std::optional<Rational> rational_nth_root(const Rational& v, unsigned long n);

// Prime factorization of |v|, v != 0. Trial division plus Pollard rho;
// inputs at desk scale factor instantly.
std::map<Integer, unsigned long> factor_integer(Integer v);

// p-adic valuations of a nonzero rational over all primes dividing the
// numerator or denominator; values can be negative.
std::map<Integer, long> rational_valuations(const Rational& q);

// Extended Euclid certificate: x*m + y*n = 1 for coprime m, n with n >= 1.
// x is the minimal-absolute-value inverse of m mod n (ties resolved
// positive); for n == 1 returns (1, 1-m).
std::pair<Integer, Integer> bezout_pair(const Integer& m, const Integer& n);

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace spectra
