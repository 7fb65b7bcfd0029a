#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pellwall {

/// Arbitrary-precision signed integer. All arithmetic in this library is
/// exact; there is no floating point anywhere on a value-producing path.
using Integer = mpz_class;

/// Floor of the square root of n. Requires n >= 0.
Integer isqrt(const Integer& n);

/// True iff n = m^2 for some integer m. Requires n >= 0.
bool is_perfect_square(const Integer& n);

/// True iff n = m^2 for some integer m, and stores m. Requires n >= 0.
bool is_perfect_square(const Integer& n, Integer& root);

/// Deterministic-in-practice primality test (BPSW + Miller-Rabin rounds via
/// GMP). No pseudoprime is known for this combination.
bool is_probable_prime(const Integer& n);

/// Prime factorization of n >= 1, ascending, with multiplicity. Empty for
/// n = 1. Trial division below 10^6, then Pollard rho on whatever is left.
std::vector<Integer> factor(Integer n);

/// Distinct prime divisors of n >= 1, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace pellwall
