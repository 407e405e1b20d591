#include "umbral/umbral_bs.hpp"

#include <string>

namespace umbral {

namespace {

std::string key_string(unsigned r, unsigned s) {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

// (Delta^n g)(x) = sum_k binom(n, k) (-1)^{n-k} g(x + k) with g(k) = (-1)^k B_k.
Rational forward_difference_of_signed_bernoulli(const BernoulliCache& cache, unsigned n,
                                                unsigned x) {
  Rational acc;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational& b = cache.at(x + k);
    if (b.is_zero()) continue;
    int sign = parity_sign(n - k) * parity_sign(x + k);
    acc += Rational(binomial(n, k) * Int(sign)) * b;
  }
  return acc;
}

}  // namespace

BsTable::BsTable(unsigned max_r, unsigned max_s, std::vector<Rational> entries)
    : max_r_(max_r), max_s_(max_s), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(max_r + 1) * (max_s + 1)) {
    throw DomainError("BsTable: entry count does not match the rectangle");
  }
}

const Rational& BsTable::at(unsigned r, unsigned s) const {
  if (r > max_r_ || s > max_s_) {
    throw RangeError("BsTable: key " + key_string(r, s) + " outside " +
                     key_string(max_r_, max_s_));
  }
  return entries_[static_cast<std::size_t>(r) * (max_s_ + 1) + s];
}

Rational bs_direct(const BernoulliCache& cache, unsigned r, unsigned s) {
  cache.require(static_cast<unsigned long>(r) + s, "bs_direct");
  Rational acc;
  for (unsigned k = 0; k <= r; ++k) {
    const Rational& b = cache.at(s + k);
    if (b.is_zero()) continue;
    acc += Rational(binomial(r, k)) * b;
  }
  return acc;
}

BsTable bs_table_recursive(const BernoulliCache& cache, unsigned max_r, unsigned max_s) {
  const unsigned width = max_r + max_s;
  cache.require(width, "bs_table_recursive");

  // Row r of the staircase covers shifts 0..width - r.
  std::vector<Rational> row(cache.values().begin(), cache.values().begin() + width + 1);
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(max_r + 1) * (max_s + 1));
  for (unsigned r = 0;; ++r) {
    entries.insert(entries.end(), row.begin(), row.begin() + max_s + 1);
    if (r == max_r) break;
    for (std::size_t s = 0; s + 1 < row.size(); ++s) row[s] += row[s + 1];
    row.pop_back();
  }
  return BsTable(max_r, max_s, std::move(entries));
}

Rational bs_via_difference(const BernoulliCache& cache, unsigned r, unsigned s) {
  cache.require(static_cast<unsigned long>(r) + s, "bs_via_difference");
  Rational over_rank = forward_difference_of_signed_bernoulli(cache, r, s);
  if (parity_sign(r + s) < 0) over_rank = -over_rank;
  Rational over_shift = forward_difference_of_signed_bernoulli(cache, s, r);
  if (over_rank != over_shift) {
    throw InvariantViolation("difference forms disagree at " + key_string(r, s) + ": " +
                             over_rank.to_string() + " vs " + over_shift.to_string());
  }
  return over_rank;
}

bool bs_shift_identity_check(const BernoulliCache& cache, unsigned r, unsigned s, unsigned n) {
  cache.require(static_cast<unsigned long>(r) + s + n, "bs_shift_identity_check");
  Rational rhs;
  for (unsigned k = 0; k <= n; ++k) rhs += Rational(binomial(n, k)) * bs_direct(cache, r, s + k);
  return bs_direct(cache, r + n, s) == rhs;
}

Rational antidiagonal_sum(const BernoulliCache& cache, unsigned n) {
  cache.require(n, "antidiagonal_sum");
  Rational acc;
  for (unsigned r = 0; r <= n; ++r) acc += bs_direct(cache, r, n - r);
  return acc;
}

Poly bs_polynomial(const BernoulliCache& cache, unsigned r, unsigned s) {
  cache.require(static_cast<unsigned long>(r) + s, "bs_polynomial");
  Poly acc;
  for (unsigned k = 0; k <= r; ++k) {
    acc = poly_add(acc, poly_scale(bernoulli_polynomial(cache, s + k), Rational(binomial(r, k))));
  }
  if (acc.degree() != std::optional<std::size_t>(r + s) || acc.coeffs().back() != Rational(1)) {
    throw InvariantViolation("B_{r,s}(x) at " + key_string(r, s) + " is not monic of degree r+s");
  }
  return acc;
}

Rational grabisch_b(const BernoulliCache& cache, unsigned m, unsigned d) {
  if (m > d) {
    throw DomainError("grabisch_b needs m <= d, got m=" + std::to_string(m) +
                      " d=" + std::to_string(d));
  }
  return bs_direct(cache, m, d - m);
}

bool is_vanishing_key(unsigned r, unsigned s) {
  unsigned n = r + s;
  return (r == 0 || s == 0) && n >= 3 && n % 2 == 1;
}

}  // namespace umbral
