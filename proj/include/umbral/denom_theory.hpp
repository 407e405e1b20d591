#pragma once

#include "umbral/umbral_bs.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace umbral {

/**
 * Psi_{r,s}(p) = sum of binom(r, k) over 0 <= k <= r with s + k even and
 * (p - 1) | (s + k). The index set is kept so the regimes of the sum can be
 * inspected directly.
 */
struct PsiValue {
  unsigned r = 0;
  unsigned s = 0;
  unsigned p = 0;
  Int value;
  std::vector<unsigned> index_set;
};

/// Squarefree denominator written as 2^eps2 times a list of odd primes.
struct DenomFactorization {
  unsigned eps2 = 0;
  std::vector<unsigned> primes;  // odd, strictly increasing
  Int value;

  /// e.g. "2 * 3 * 7", "1" for the empty product.
  [[nodiscard]] std::string to_string() const;
};

/// Throws DomainError when p is not prime.
PsiValue psi(unsigned r, unsigned s, unsigned p);

/// The integer B_{r,s} + sum_{2 <= p <= r+s+1} Psi_{r,s}(p) / p for
/// r, s >= 2. The p = 2 term equals 2^{r-2}, an integer. Throws
/// InvariantViolation if the total is not integral.
Int integrality_witness(const BernoulliCache& cache, unsigned r, unsigned s);

/// denom(B_{r,s}) read off the exact value.
Int denom_exact(const BernoulliCache& cache, unsigned r, unsigned s);

/// Product of the primes 3 <= p <= r+s+1 with p not dividing Psi_{r,s}(p).
/// Only stated for r, s >= 2; DomainError otherwise.
Int denom_via_psi(unsigned r, unsigned s);

/// Closed product formula. For r, s >= 1:
///   2^eps2 * 3 * prod { p : 5 <= p <= r+s+1, <r>_{p-1} + <s>_{p-1} >= p-1 }
/// with eps2 = 1 iff (r = 1 or s = 1) and r != s. Otherwise the
/// factorization of denom(B_{max(r,s)}).
DenomFactorization denom_formula(unsigned r, unsigned s);

/// (-1)^r Psi_{r,s}(p) == (-1)^s Psi_{s,r}(p) (mod p), r, s >= 1.
bool psi_reciprocity_check(unsigned r, unsigned s, unsigned p);

/// For s == s2 and r == r2 (mod p-1): Psi_{r,s}(p) == Psi_{r,s2}(p) exactly
/// and Psi_{r,s}(p) == Psi_{r2,s}(p) (mod p). Preconditions r, r2 >= 1 and
/// prime p >= 3 plus both congruences; violations throw DomainError.
bool psi_periodicity_check(unsigned r, unsigned r2, unsigned s, unsigned s2, unsigned p);

/// (Psi_{r,s}(p)) for 1 <= r, s <= p-2, row-major.
class PsiMatrix {
 public:
  PsiMatrix(unsigned p, std::vector<Int> entries);

  [[nodiscard]] unsigned p() const { return p_; }
  [[nodiscard]] unsigned size() const { return p_ - 2; }
  /// 1-based, as in Psi_{r,s}.
  [[nodiscard]] const Int& at(unsigned r, unsigned s) const;

 private:
  unsigned p_;
  std::vector<Int> entries_;
};

/// Builds the matrix for a prime p >= 5 and checks its shape: zero above the
/// anti-diagonal, one on it, binom(r, p-1-s) and prime to p below it. A
/// violation throws InvariantViolation.
PsiMatrix psi_matrix(unsigned p);

/// One falsified instance of a denominator property.
struct DivisibilityWitness {
  std::string part;
  unsigned r = 0;
  unsigned s = 0;
  unsigned p = 0;  // 0 when no prime is involved
};

struct Theorem4Part {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
};

struct Theorem4Report {
  unsigned max_r = 0;
  unsigned max_s = 0;
  std::vector<Theorem4Part> parts;
  std::vector<DivisibilityWitness> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/**
 * Sweeps 0 <= r <= max_r, 0 <= s <= max_s and checks, on denom(B_{r,s}):
 *   (i)   symmetry D_{r,s} = D_{s,r}
 *   (ii)  D_{0,s} = D_s
 *   (iii) D_{1,s} = 2, 3, D_s, D_{s+1} for s = 0, s = 1, even s >= 2, odd s >= 3
 *   (iv)  2 does not divide D_{r,s} for r, s >= 2
 *   (v)   3 divides D_{r,s} for r, s >= 1
 *   (vi)  p divides D_{r,s} for even r >= 2 and primes p >= 3 with (p-1) | r
 * plus squarefreeness and D_{r,s} = 1 exactly on (0,0), (n,0), (0,n), n odd >= 3.
 * The cache must reach max_r + max_s.
 */
Theorem4Report theorem4_divisibility_sweep(const BernoulliCache& cache, unsigned max_r,
                                           unsigned max_s);

/// True iff n != 0 has no prime factor above `bound` and no repeated prime
/// factor. Denominators in this library are always (r+s+1)-smooth.
bool is_smooth_squarefree(const Int& n, unsigned bound);

}  // namespace umbral
