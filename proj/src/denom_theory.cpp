#include "umbral/denom_theory.hpp"

#include <algorithm>
#include <string>

namespace umbral {

namespace {

std::string key_string(unsigned r, unsigned s) {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

DenomFactorization factorize_squarefree(const Int& value, unsigned bound) {
  DenomFactorization f;
  f.value = value;
  Int rest = value;
  for (unsigned p : primes_up_to(bound)) {
    if (!rest.divisible_by(p)) continue;
    rest = divexact(rest, Int(p));
    if (p == 2) {
      f.eps2 = 1;
    } else {
      f.primes.push_back(p);
    }
  }
  if (!rest.is_one()) {
    throw InvariantViolation("denominator " + value.to_string() + " is not squarefree over primes <= " +
                             std::to_string(bound));
  }
  return f;
}

}  // namespace

std::string DenomFactorization::to_string() const {
  std::string out;
  auto append = [&out](unsigned p) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
  };
  if (eps2 == 1) append(2);
  for (unsigned p : primes) append(p);
  return out.empty() ? "1" : out;
}

PsiValue psi(unsigned r, unsigned s, unsigned p) {
  require_prime(p);
  PsiValue out{r, s, p, Int(0), {}};
  const unsigned period = p - 1;
  for (unsigned k = 0; k <= r; ++k) {
    unsigned n = s + k;
    if (n % 2 == 0 && n % period == 0) {
      out.index_set.push_back(k);
      out.value += binomial(r, k);
    }
  }
  return out;
}

Int integrality_witness(const BernoulliCache& cache, unsigned r, unsigned s) {
  if (r < 2 || s < 2) {
    throw DomainError("integrality_witness needs r, s >= 2, got " + key_string(r, s));
  }
  Rational total = bs_direct(cache, r, s);
  for (unsigned p : primes_up_to(r + s + 1)) {
    total += Rational(psi(r, s, p).value, Int(p));
  }
  if (!total.is_integer()) {
    throw InvariantViolation("B" + key_string(r, s) + " + sum Psi(p)/p = " + total.to_string() +
                             " is not an integer");
  }
  return total.num();
}

Int denom_exact(const BernoulliCache& cache, unsigned r, unsigned s) {
  return bs_direct(cache, r, s).den();
}

Int denom_via_psi(unsigned r, unsigned s) {
  if (r < 2 || s < 2) {
    throw DomainError("denom_via_psi needs r, s >= 2, got " + key_string(r, s));
  }
  Int d(1);
  for (unsigned p : primes_up_to(r + s + 1)) {
    if (p < 3) continue;
    if (!psi(r, s, p).value.divisible_by(p)) d *= Int(p);
  }
  return d;
}

DenomFactorization denom_formula(unsigned r, unsigned s) {
  if (r == 0 || s == 0) {
    unsigned n = std::max(r, s);
    return factorize_squarefree(bernoulli_denominator(n), n + 1);
  }
  DenomFactorization f;
  f.eps2 = ((r == 1 || s == 1) && r != s) ? 1 : 0;
  f.primes.push_back(3);
  for (unsigned p : primes_up_to(r + s + 1)) {
    if (p < 5) continue;
    if (least_positive_residue(r, p - 1) + least_positive_residue(s, p - 1) >= p - 1) {
      f.primes.push_back(p);
    }
  }
  Int value(f.eps2 == 1 ? 2 : 1);
  for (unsigned p : f.primes) value *= Int(p);
  f.value = std::move(value);
  return f;
}

bool psi_reciprocity_check(unsigned r, unsigned s, unsigned p) {
  if (r < 1 || s < 1) {
    throw DomainError("psi_reciprocity_check needs r, s >= 1, got " + key_string(r, s));
  }
  Int lhs = psi(r, s, p).value * Int(parity_sign(r));
  Int rhs = psi(s, r, p).value * Int(parity_sign(s));
  return (lhs - rhs).divisible_by(p);
}

bool psi_periodicity_check(unsigned r, unsigned r2, unsigned s, unsigned s2, unsigned p) {
  require_prime(p);
  if (p < 3) throw DomainError("psi_periodicity_check needs p >= 3");
  if (r < 1 || r2 < 1) throw DomainError("psi_periodicity_check needs ranks >= 1");
  const unsigned period = p - 1;
  if (r % period != r2 % period || s % period != s2 % period) {
    throw DomainError("psi_periodicity_check: indices not congruent mod p-1");
  }
  const Int base = psi(r, s, p).value;
  const bool shift_exact = base == psi(r, s2, p).value;
  const bool rank_mod_p = (base - psi(r2, s, p).value).divisible_by(p);
  return shift_exact && rank_mod_p;
}

PsiMatrix::PsiMatrix(unsigned p, std::vector<Int> entries) : p_(p), entries_(std::move(entries)) {
  if (p_ < 3 || entries_.size() != static_cast<std::size_t>(p_ - 2) * (p_ - 2)) {
    throw DomainError("PsiMatrix: entry count does not match p - 2");
  }
}

const Int& PsiMatrix::at(unsigned r, unsigned s) const {
  if (r < 1 || s < 1 || r > size() || s > size()) {
    throw RangeError("PsiMatrix: index " + key_string(r, s) + " outside 1..p-2");
  }
  return entries_[static_cast<std::size_t>(r - 1) * size() + (s - 1)];
}

PsiMatrix psi_matrix(unsigned p) {
  require_prime(p);
  if (p < 5) throw DomainError("psi_matrix needs p >= 5");
  const unsigned n = p - 2;
  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned s = 1; s <= n; ++s) {
      Int v = psi(r, s, p).value;
      bool ok = false;
      if (r + s < p - 1) {
        ok = v.is_zero();
      } else if (r + s == p - 1) {
        ok = v.is_one();
      } else {
        ok = v == binomial(r, static_cast<long>(p - 1 - s)) && !v.divisible_by(p);
      }
      if (!ok) {
        throw InvariantViolation("Psi matrix for p=" + std::to_string(p) + " breaks its shape at " +
                                 key_string(r, s) + ": " + v.to_string());
      }
      entries.push_back(std::move(v));
    }
  }
  return PsiMatrix(p, std::move(entries));
}

bool is_smooth_squarefree(const Int& n, unsigned bound) {
  if (n.is_zero()) return false;
  Int rest = n.abs();
  for (unsigned p : primes_up_to(bound)) {
    if (!rest.divisible_by(p)) continue;
    rest = divexact(rest, Int(p));
    if (rest.divisible_by(p)) return false;
  }
  return rest.is_one();
}

Theorem4Report theorem4_divisibility_sweep(const BernoulliCache& cache, unsigned max_r,
                                           unsigned max_s) {
  cache.require(static_cast<unsigned long>(max_r) + max_s, "theorem4_divisibility_sweep");

  Theorem4Report report;
  report.max_r = max_r;
  report.max_s = max_s;
  report.parts = {{"(i) symmetry"},   {"(ii) D_{0,s} = D_s"}, {"(iii) D_{1,s}"},
                  {"(iv) 2 !| D"},    {"(v) 3 | D"},          {"(vi) p | D for p-1 | r"},
                  {"squarefree"},     {"D = 1 exceptions"}};
  auto tally = [&report](std::size_t part, bool ok, unsigned r, unsigned s, unsigned p = 0) {
    auto& entry = report.parts[part];
    ++entry.checked;
    if (ok) {
      ++entry.passed;
    } else {
      report.failures.push_back({entry.name, r, s, p});
    }
  };

  for (unsigned r = 0; r <= max_r; ++r) {
    for (unsigned s = 0; s <= max_s; ++s) {
      const Int d = denom_exact(cache, r, s);

      tally(0, d == denom_exact(cache, s, r), r, s);
      if (r == 0) tally(1, d == bernoulli_denominator(s), r, s);
      if (r == 1) {
        Int expected;
        if (s == 0) {
          expected = Int(2);
        } else if (s == 1) {
          expected = Int(3);
        } else if (s % 2 == 0) {
          expected = bernoulli_denominator(s);
        } else {
          expected = bernoulli_denominator(s + 1);
        }
        tally(2, d == expected, r, s);
      }
      if (r >= 2 && s >= 2) tally(3, !d.divisible_by(2UL), r, s, 2);
      if (r >= 1 && s >= 1) tally(4, d.divisible_by(3UL), r, s, 3);
      if (r >= 2 && r % 2 == 0) {
        for (unsigned p : primes_up_to(r + 1)) {
          if (p >= 3 && r % (p - 1) == 0) tally(5, d.divisible_by(p), r, s, p);
        }
      }
      tally(6, is_smooth_squarefree(d, r + s + 1), r, s);
      const bool expect_one = (r == 0 && s == 0) || is_vanishing_key(r, s);
      tally(7, d.is_one() == expect_one, r, s);
    }
  }
  return report;
}

}  // namespace umbral
