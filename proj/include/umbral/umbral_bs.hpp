#pragma once

#include "umbral/bernoulli.hpp"

#include <vector>

namespace umbral {

/// Index of a number B_{r,s}: rank r, shift s.
struct BsKey {
  unsigned r = 0;
  unsigned s = 0;

  friend bool operator==(const BsKey&, const BsKey&) = default;
  friend auto operator<=>(const BsKey&, const BsKey&) = default;
};

/**
 * Dense (max_r + 1) x (max_s + 1) grid of B_{r,s}, row-major in r.
 *
 * Built by bs_table_recursive: row 0 holds the Bernoulli numbers and every
 * further row comes from B_{r+1,s} = B_{r,s} + B_{r,s+1}.
 */
class BsTable {
 public:
  BsTable(unsigned max_r, unsigned max_s, std::vector<Rational> entries);

  [[nodiscard]] unsigned max_r() const { return max_r_; }
  [[nodiscard]] unsigned max_s() const { return max_s_; }

  /// Throws RangeError outside the rectangle.
  [[nodiscard]] const Rational& at(unsigned r, unsigned s) const;

 private:
  unsigned max_r_;
  unsigned max_s_;
  std::vector<Rational> entries_;
};

/// B_{r,s} = sum_{k=0}^{r} binom(r, k) B_{s+k}.
Rational bs_direct(const BernoulliCache& cache, unsigned r, unsigned s);

BsTable bs_table_recursive(const BernoulliCache& cache, unsigned max_r, unsigned max_s);

/// B_{r,s} via the two iterated forward differences of f(k) = (-1)^k B_k:
///   (-1)^{r+s} (Delta^r f)(s)   and   (Delta^s f)(r).
/// Both are evaluated; disagreement throws InvariantViolation.
Rational bs_via_difference(const BernoulliCache& cache, unsigned r, unsigned s);

/// B_{r+n,s} == sum_{k=0}^{n} binom(n, k) B_{r,s+k}.
bool bs_shift_identity_check(const BernoulliCache& cache, unsigned r, unsigned s, unsigned n);

/// Sum of B_{r,s} over r + s = n: 1 for n = 0, else 0.
Rational antidiagonal_sum(const BernoulliCache& cache, unsigned n);

/// B_{r,s}(x) = sum_{k=0}^{r} binom(r, k) B_{s+k}(x). Degree r + s, monic,
/// constant term B_{r,s}.
Poly bs_polynomial(const BernoulliCache& cache, unsigned r, unsigned s);

/// Denneberg-Grabisch numbers b_m^d = B_{m,d-m}. Throws DomainError for m > d.
Rational grabisch_b(const BernoulliCache& cache, unsigned m, unsigned d);

/// True for the keys where B_{r,s} vanishes: (n, 0) and (0, n) with odd n >= 3.
bool is_vanishing_key(unsigned r, unsigned s);

}  // namespace umbral
