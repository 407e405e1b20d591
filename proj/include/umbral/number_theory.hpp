#pragma once

#include "umbral/int.hpp"

#include <vector>

namespace umbral {

/// binom(n, k); zero for k < 0 or k > n.
Int binomial(unsigned n, long k);

/// All primes p <= bound, increasing (sieve of Eratosthenes).
std::vector<unsigned> primes_up_to(unsigned bound);

/// Trial division.
bool is_prime(unsigned n);

/// The representative of x (mod m) in {1, ..., m}. Returns m, not 0, when
/// m | x. Throws DomainError for x = 0 or m = 0.
unsigned least_positive_residue(unsigned x, unsigned m);

}  // namespace umbral
