#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pmahler {

using Integer = mpz_class;
using Rational = mpq_class;

using Prime = std::uint64_t;

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Throws DomainError unless `p` is prime.
void require_prime(Prime p);

/// v_p of a nonzero integer. Precondition: n != 0.
long valuation(const Integer& n, Prime p);

/// Removes all factors of p from n, returning the p-free part.
Integer strip_prime(const Integer& n, Prime p);

/// p^k as an Integer.
Integer prime_power(Prime p, unsigned long k);

/// Factorization of |n| by trial division; primes ascending.
/// Throws DomainError if |n| exceeds `bound`.
std::vector<std::pair<Prime, unsigned long>> factor_by_trial_division(
    const Integer& n, const Integer& bound);

/// "num/den" for non-integers, "num" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Natural log of |z| for z != 0, accurate to double rounding even when
/// z does not fit in a double.
double log_abs(const Integer& z);

}  // namespace pmahler
