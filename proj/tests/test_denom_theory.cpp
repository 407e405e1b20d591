#include "umbral/denom_theory.hpp"

#include "oracles.hpp"
#include "table1.hpp"

#include <gtest/gtest.h>

using namespace umbral;
using umbral::testing::parse_rational;
using umbral::testing::psi_enumerate;

namespace {

const BernoulliCache& cache() {
  static const BernoulliCache c(170);
  return c;
}

}  // namespace

TEST(Psi, Examples) {
  EXPECT_EQ(psi(2, 2, 7).value, Int(0));
  EXPECT_EQ(psi(2, 2, 2).value, Int(2));
  EXPECT_EQ(psi(2, 2, 5).value, Int(1));
  const PsiValue v = psi(3, 3, 5);
  EXPECT_EQ(v.value, Int(3));
  EXPECT_EQ(v.index_set, (std::vector<unsigned>{1}));
  EXPECT_EQ(v.value, binomial(3, 5 - 1 - 3));
  EXPECT_TRUE(psi(2, 2, 11).index_set.empty());
  EXPECT_THROW((void)psi(2, 2, 9), DomainError);
  EXPECT_THROW((void)psi(2, 2, 1), DomainError);
}

TEST(Psi, MatchesEnumerationOracle) {
  for (unsigned p : primes_up_to(61)) {
    for (unsigned r = 0; r <= 40; ++r) {
      for (unsigned s = 0; s <= 40; ++s) {
        ASSERT_EQ(psi(r, s, p).value, Int(psi_enumerate(r, s, p))) << r << "," << s << " p=" << p;
      }
    }
  }
}

// For s = 0 the index nu = 0 always qualifies, so Psi_{r,0}(p) >= 1 for every p.
TEST(Psi, ZeroBeyondWeightPlusOne) {
  for (unsigned r = 0; r <= 30; ++r) {
    EXPECT_TRUE(psi(r, 0, 101).value.is_one()) << r;
    for (unsigned s = 1; s <= 30; ++s) {
      unsigned seen = 0;
      for (unsigned p = r + s + 2; seen < 10; ++p) {
        if (!is_prime(p)) continue;
        ++seen;
        ASSERT_TRUE(psi(r, s, p).value.is_zero()) << r << "," << s << " p=" << p;
      }
    }
  }
}

TEST(Psi, SmallPrimesArePowersOfTwo) {
  for (unsigned r = 2; r <= 60; ++r) {
    for (unsigned s = 2; s <= 60; ++s) {
      const Int two = psi(r, s, 2).value;
      ASSERT_EQ(two, Int::pow2(r - 1));
      ASSERT_EQ(psi(r, s, 3).value, two);
      ASSERT_TRUE(two.divisible_by(2UL));
      ASSERT_FALSE(two.divisible_by(3UL));
    }
  }
}

TEST(Psi, UnitWhenPMinusOneDividesAnIndex) {
  for (unsigned p : primes_up_to(61)) {
    if (p < 5) continue;
    for (unsigned r = 2; r <= 60; ++r) {
      for (unsigned s = 2; s <= 60; ++s) {
        if (r % (p - 1) != 0 && s % (p - 1) != 0) continue;
        ASSERT_FALSE(psi(r, s, p).value.divisible_by(p)) << r << "," << s << " p=" << p;
      }
    }
  }
}

TEST(IntegralityWitness, FrozenValues) {
  // Expected integers from an independent rational evaluation.
  EXPECT_EQ(integrality_witness(cache(), 2, 2), Int(2));
  EXPECT_EQ(integrality_witness(cache(), 2, 3), Int(2));
  EXPECT_EQ(integrality_witness(cache(), 8, 8), Int(149));
  EXPECT_EQ(integrality_witness(cache(), 5, 7), Int(16));
  EXPECT_EQ(integrality_witness(cache(), 10, 3), Int(512));
  EXPECT_THROW((void)integrality_witness(cache(), 1, 5), DomainError);
}

TEST(IntegralityWitness, HandEvaluation) {
  // 2/15 + 2/2 + 2/3 + 1/5 with Psi values at p = 2, 3, 5.
  Rational total = parse_rational("2/15");
  for (unsigned p : {2U, 3U, 5U}) total += Rational(Int(psi_enumerate(2, 2, p)), Int(p));
  EXPECT_EQ(total, Rational(2));
}

TEST(DenomExact, Examples) {
  EXPECT_EQ(denom_exact(cache(), 2, 2), Int(15));
  EXPECT_EQ(denom_exact(cache(), 3, 0), Int(1));
  EXPECT_EQ(denom_exact(cache(), 8, 8), Int(36465));
}

TEST(DenomViaPsi, Examples) {
  EXPECT_EQ(denom_via_psi(2, 2), Int(15));
  EXPECT_EQ(denom_via_psi(3, 3), Int(105));
  EXPECT_EQ(denom_via_psi(2, 5), Int(21));
  EXPECT_THROW((void)denom_via_psi(1, 4), DomainError);
  EXPECT_THROW((void)denom_via_psi(4, 0), DomainError);
}

TEST(DenomFormula, Examples) {
  const auto d11 = denom_formula(1, 1);
  EXPECT_EQ(d11.value, Int(3));
  EXPECT_EQ(d11.eps2, 0u);
  const auto d12 = denom_formula(1, 2);
  EXPECT_EQ(d12.value, Int(6));
  EXPECT_EQ(d12.eps2, 1u);
  const auto d88 = denom_formula(8, 8);
  EXPECT_EQ(d88.value, Int(36465));
  EXPECT_EQ(d88.primes, (std::vector<unsigned>{3, 5, 11, 13, 17}));
  EXPECT_EQ(d88.to_string(), "3 * 5 * 11 * 13 * 17");
  EXPECT_EQ(denom_formula(0, 7).value, Int(1));
  EXPECT_EQ(denom_formula(0, 7).to_string(), "1");
  EXPECT_EQ(denom_formula(1, 0).value, Int(2));
  EXPECT_EQ(denom_formula(12, 0).value, Int(2730));
}

TEST(DenomFormula, TableOneDenominators) {
  for (unsigned r = 0; r <= 8; ++r) {
    for (unsigned s = 0; s <= 8; ++s) {
      EXPECT_EQ(denom_formula(r, s).value, parse_rational(kTable1[r][s]).den()) << r << "," << s;
    }
  }
}

TEST(Denominators, TripleAgreement) {
  for (unsigned r = 0; r <= 50; ++r) {
    for (unsigned s = 0; s <= 50; ++s) {
      const Int exact = denom_exact(cache(), r, s);
      const auto f = denom_formula(r, s);
      ASSERT_EQ(f.value, exact) << r << "," << s;
      ASSERT_EQ(f.value, denom_formula(s, r).value);
      if (r >= 2 && s >= 2) ASSERT_EQ(denom_via_psi(r, s), exact) << r << "," << s;
      if (r >= 1 && s >= 1) {
        ASSERT_FALSE(f.primes.empty());
        ASSERT_EQ(f.primes.front(), 3u);
      }
      for (unsigned p : f.primes) ASSERT_LE(p, r + s + 1);
    }
  }
}

TEST(PsiReciprocity, Examples) {
  EXPECT_TRUE(psi_reciprocity_check(2, 2, 5));
  EXPECT_TRUE(psi_reciprocity_check(3, 4, 5));
  EXPECT_TRUE(psi_reciprocity_check(1, 6, 7));
  EXPECT_THROW((void)psi_reciprocity_check(0, 6, 7), DomainError);
}

TEST(PsiPeriodicity, Examples) {
  EXPECT_TRUE(psi_periodicity_check(2, 2, 1, 5, 5));
  EXPECT_EQ(psi(2, 1, 5).value, psi(2, 5, 5).value);
  EXPECT_TRUE(psi_periodicity_check(2, 6, 3, 3, 5));
  EXPECT_EQ(psi(2, 3, 5).value.mod(5), psi(6, 3, 5).value.mod(5));
  for (unsigned s = 0; s <= 12; ++s) EXPECT_TRUE(psi_periodicity_check(1, 5, s, s, 5)) << s;
}

TEST(PsiPeriodicity, Preconditions) {
  EXPECT_THROW((void)psi_periodicity_check(2, 3, 1, 1, 5), DomainError);
  EXPECT_THROW((void)psi_periodicity_check(2, 2, 1, 2, 5), DomainError);
  EXPECT_THROW((void)psi_periodicity_check(0, 4, 1, 1, 5), DomainError);
  EXPECT_THROW((void)psi_periodicity_check(2, 2, 1, 1, 2), DomainError);
  EXPECT_THROW((void)psi_periodicity_check(2, 2, 1, 1, 9), DomainError);
}

TEST(PsiPeriodicity, SmallSweep) {
  for (unsigned p : {3U, 5U, 7U, 11U}) {
    const unsigned period = p - 1;
    for (unsigned r = 1; r <= 20; ++r) {
      for (unsigned s = 0; s <= 20; ++s) {
        for (unsigned r2 = (r - 1) % period + 1; r2 <= 20; r2 += period) {
          for (unsigned s2 = s % period; s2 <= 20; s2 += period) {
            ASSERT_TRUE(psi_periodicity_check(r, r2, s, s2, p));
          }
        }
      }
    }
  }
}

TEST(PsiMatrix, PrimeFive) {
  const PsiMatrix m = psi_matrix(5);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.at(1, 1), Int(0));
  EXPECT_EQ(m.at(1, 2), Int(0));
  EXPECT_EQ(m.at(1, 3), Int(1));
  EXPECT_EQ(m.at(2, 2), Int(1));
  EXPECT_EQ(m.at(3, 1), Int(1));
  EXPECT_EQ(m.at(3, 3), Int(3));
  EXPECT_EQ(m.at(2, 3), Int(2));
  EXPECT_THROW((void)m.at(0, 1), RangeError);
  EXPECT_THROW((void)m.at(4, 1), RangeError);
}

TEST(PsiMatrix, ShapeForSeveralPrimes) {
  for (unsigned p : {5U, 7U, 11U, 13U, 17U, 19U}) {
    const PsiMatrix m = psi_matrix(p);
    for (unsigned r = 1; r <= p - 2; ++r) {
      for (unsigned s = 1; s <= p - 2; ++s) {
        if (r + s < p - 1) ASSERT_TRUE(m.at(r, s).is_zero());
        if (r + s == p - 1) ASSERT_TRUE(m.at(r, s).is_one());
        if (r + s > p - 1) ASSERT_FALSE(m.at(r, s).divisible_by(p));
      }
    }
  }
  EXPECT_EQ(psi_matrix(7).at(2, 4), Int(1));
  EXPECT_THROW((void)psi_matrix(3), DomainError);
  EXPECT_THROW((void)psi_matrix(15), DomainError);
}

TEST(ResidueCriterion, UnitIffResiduesReachPMinusOne) {
  for (unsigned p : primes_up_to(37)) {
    if (p < 5) continue;
    for (unsigned r = 1; r <= 80; ++r) {
      for (unsigned s = 1; s <= 80; ++s) {
        const bool unit = !psi(r, s, p).value.divisible_by(p);
        const bool residues =
            least_positive_residue(r, p - 1) + least_positive_residue(s, p - 1) >= p - 1;
        ASSERT_EQ(unit, residues) << r << "," << s << " p=" << p;
      }
    }
  }
}

TEST(Theorem4, SweepPassesWithKnownInstances) {
  const Theorem4Report rep = theorem4_divisibility_sweep(cache(), 40, 40);
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.parts.size(), 8u);
  for (const auto& part : rep.parts) {
    EXPECT_GT(part.checked, 0u) << part.name;
    EXPECT_EQ(part.checked, part.passed) << part.name;
  }
  EXPECT_EQ(denom_exact(cache(), 1, 3), Int(30));
  EXPECT_EQ(bernoulli_denominator(4), Int(30));
  EXPECT_FALSE(denom_exact(cache(), 2, 2).divisible_by(2UL));
  EXPECT_EQ(bs_direct(cache(), 6, 2), parse_rational("-1/105"));
  EXPECT_TRUE(denom_exact(cache(), 6, 2).divisible_by(7UL));
}

TEST(Theorem4, RequiresCapacity) {
  EXPECT_THROW((void)theorem4_divisibility_sweep(BernoulliCache(10), 6, 6), RangeError);
}

TEST(SmoothSquarefree, Basics) {
  EXPECT_TRUE(is_smooth_squarefree(Int(1), 1));
  EXPECT_TRUE(is_smooth_squarefree(Int(30), 5));
  EXPECT_FALSE(is_smooth_squarefree(Int(12), 5));
  EXPECT_FALSE(is_smooth_squarefree(Int(14), 5));
  EXPECT_FALSE(is_smooth_squarefree(Int(0), 5));
}
