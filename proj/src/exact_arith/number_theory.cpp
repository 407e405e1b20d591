#include "umbral/number_theory.hpp"

#include "umbral/errors.hpp"

namespace umbral {

Int binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return Int(0);
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, static_cast<unsigned long>(k));
  return Int(std::move(v));
}

std::vector<unsigned> primes_up_to(unsigned bound) {
  std::vector<unsigned> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<unsigned>(i));
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned least_positive_residue(unsigned x, unsigned m) {
  if (x == 0) throw DomainError("least positive residue of 0 is not defined here");
  if (m == 0) throw DomainError("modulus must be positive");
  unsigned r = x % m;
  return r == 0 ? m : r;
}

}  // namespace umbral
