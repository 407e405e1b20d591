#pragma once

#include "umbral/exact_arith.hpp"

#include <span>
#include <vector>

namespace umbral {

/**
 * Sealed table of the Bernoulli numbers B_0, ..., B_capacity with the
 * convention B_1 = -1/2 (generating function t / (e^t - 1)).
 *
 * The table is filled once in the constructor and never grows afterwards, so
 * a single instance can be shared by any number of reader threads. Reads past
 * the capacity throw RangeError.
 */
class BernoulliCache {
 public:
  explicit BernoulliCache(unsigned capacity);

  [[nodiscard]] unsigned capacity() const { return capacity_; }

  /// B_n; throws RangeError for n > capacity().
  [[nodiscard]] const Rational& at(unsigned n) const;

  [[nodiscard]] std::span<const Rational> values() const { return values_; }

  /// Throws RangeError unless n <= capacity(); `what` names the caller.
  void require(unsigned long n, const char* what) const;

 private:
  unsigned capacity_;
  std::vector<Rational> values_;
};

Rational bernoulli_number(const BernoulliCache& cache, unsigned n);

/// B_n(x) = sum_k binom(n, k) B_{n-k} x^k; monic of degree n.
Poly bernoulli_polynomial(const BernoulliCache& cache, unsigned n);

/// Closed form for denom(B_n): 1, 2, 1 for n = 0, n = 1 and odd n >= 3, and
/// the product of primes p with (p - 1) | n for even n >= 2.
Int bernoulli_denominator(unsigned n);

/// The integer B_n + sum_{(p-1) | n} 1/p for even n >= 2. Throws
/// InvariantViolation if it is not an integer and DomainError for odd or
/// zero n.
Int von_staudt_clausen_witness(const BernoulliCache& cache, unsigned n);

/// sum_{1 <= k <= m-1, (p-1) | k} binom(m, k) mod p. Always 0 for prime p.
unsigned long hermite_stern_check(unsigned m, unsigned p);

}  // namespace umbral
