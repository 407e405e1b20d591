#include "umbral/bernoulli.hpp"

#include <string>

namespace umbral {

namespace {

// B_n = -1/(n+1) * sum_{k<n} binom(n+1, k) B_k. Odd k >= 3 contribute
// nothing and are skipped.
std::vector<Rational> bernoulli_sequence(unsigned capacity) {
  std::vector<Rational> b(static_cast<std::size_t>(capacity) + 1);
  b[0] = Rational(1);
  for (unsigned n = 1; n <= capacity; ++n) {
    if (n >= 3 && n % 2 == 1) continue;
    Rational sum = b[0];
    for (unsigned k = 1; k < n; k += (k == 1 ? 1 : 2)) {
      sum += Rational(binomial(n + 1, k)) * b[k];
    }
    b[n] = -sum / Rational(Int(n + 1));
  }
  return b;
}

}  // namespace

BernoulliCache::BernoulliCache(unsigned capacity)
    : capacity_(capacity), values_(bernoulli_sequence(capacity)) {}

void BernoulliCache::require(unsigned long n, const char* what) const {
  if (n > capacity_) {
    throw RangeError(std::string(what) + ": index " + std::to_string(n) +
                     " exceeds Bernoulli cache capacity " + std::to_string(capacity_));
  }
}

const Rational& BernoulliCache::at(unsigned n) const {
  require(n, "bernoulli_number");
  return values_[n];
}

Rational bernoulli_number(const BernoulliCache& cache, unsigned n) { return cache.at(n); }

Poly bernoulli_polynomial(const BernoulliCache& cache, unsigned n) {
  cache.require(n, "bernoulli_polynomial");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = Rational(binomial(n, k)) * cache.at(n - k);
  }
  return Poly(std::move(c));
}

Int bernoulli_denominator(unsigned n) {
  if (n == 0) return Int(1);
  if (n == 1) return Int(2);
  if (n % 2 == 1) return Int(1);
  Int d(1);
  for (unsigned p : primes_up_to(n + 1)) {
    if (n % (p - 1) == 0) d *= Int(p);
  }
  return d;
}

Int von_staudt_clausen_witness(const BernoulliCache& cache, unsigned n) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("von Staudt-Clausen witness needs even n >= 2, got " + std::to_string(n));
  }
  Rational sum = cache.at(n);
  for (unsigned p : primes_up_to(n + 1)) {
    if (n % (p - 1) == 0) sum += Rational(Int(1), Int(p));
  }
  if (!sum.is_integer()) {
    throw InvariantViolation("B_" + std::to_string(n) + " + sum 1/p = " + sum.to_string() +
                             " is not an integer");
  }
  return sum.num();
}

unsigned long hermite_stern_check(unsigned m, unsigned p) {
  if (m == 0) throw DomainError("hermite_stern_check needs m >= 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Int sum(0);
  for (unsigned k = p - 1; k < m; k += p - 1) sum += binomial(m, k);
  return sum.mod(p);
}

}  // namespace umbral
