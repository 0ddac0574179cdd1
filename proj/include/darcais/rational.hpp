#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace darcais {

// All combinatorial quantities are carried exactly. Rational values are kept
// canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1. GMP's mpq arithmetic
// preserves canonical form; construction from raw parts goes through
// make_rational below.
using BigInt   = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den. Throws std::domain_error if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);

/// Natural log of a positive rational with absolute error <= 1e-12, via the
/// binary decomposition num = m 2^e (m in [1/2, 1)) of each side, so that
/// huge operands never round through a single floating-point conversion.
/// Throws std::domain_error for q <= 0.
double ln_rational(const Rational& q);

}  // namespace darcais
