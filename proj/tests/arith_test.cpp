#include "sumsys/arith.hpp"

#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace sumsys {
namespace {

Integer wide(oracle::Wide v) { return Integer::from_raw(v); }

// ---------------------------------------------------------------------------
// factorise

TEST(Factorise, One) {
  const PrimeFactorisation f = factorise(1);
  EXPECT_TRUE(f.factors().empty());
  EXPECT_EQ(f.big_omega(), 0);
}

TEST(Factorise, Twelve) {
  const PrimeFactorisation f = factorise(12);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.factors()[0], (PrimePower{2, 2}));
  EXPECT_EQ(f.factors()[1], (PrimePower{3, 1}));
  EXPECT_EQ(f.big_omega(), 3);
}

TEST(Factorise, TwoSeventy) {
  const PrimeFactorisation f = factorise(270);
  const std::vector<PrimePower> expected{{2, 1}, {3, 3}, {5, 1}};
  EXPECT_TRUE(std::equal(f.factors().begin(), f.factors().end(), expected.begin(), expected.end()));
  EXPECT_EQ(f.big_omega(), 5);
}

TEST(Factorise, ZeroAndNegativeAreDomainErrors) {
  EXPECT_THROW(factorise(0), DomainError);
  EXPECT_THROW(factorise(-7), DomainError);
}

TEST(Factorise, ProductInvariantAndSortedPrimes) {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    const PrimeFactorisation f = factorise(n);
    std::int64_t product = 1;
    std::int64_t last = 1;
    for (const auto& [p, e] : f.factors()) {
      EXPECT_GT(p, last);
      EXPECT_GE(e, 1);
      last = p;
      for (int i = 0; i < e; ++i) product *= p;
    }
    EXPECT_EQ(product, n);
    EXPECT_EQ(f.big_omega(), oracle::omega_naive(n));
    EXPECT_EQ(f.divisors(), oracle::divisors_naive(n));
  }
}

TEST(Factorise, LargeArguments) {
  // 2^61 - 1 is prime.
  const PrimeFactorisation mersenne = factorise(2305843009213693951LL);
  ASSERT_EQ(mersenne.factors().size(), 1u);
  EXPECT_EQ(mersenne.big_omega(), 1);
  EXPECT_EQ(factorise(INT64_MAX).big_omega(), 7);  // 7^2 * 73 * 127 * 337 * 92737 * 649657
  EXPECT_EQ(big_omega(std::int64_t{1} << 62), 62);
}

TEST(Factorise, LargeSemiprimesAndPrimeSquares) {
  // 2147483647 and 2147483629 are prime; so is 3037000493, whose square is just below 2^63.
  const PrimeFactorisation semi = factorise(2147483647LL * 2147483629LL);
  const std::vector<PrimePower> semi_expected{{2147483629, 1}, {2147483647, 1}};
  EXPECT_TRUE(std::equal(semi.factors().begin(), semi.factors().end(), semi_expected.begin(), semi_expected.end()));
  const PrimeFactorisation square = factorise(3037000493LL * 3037000493LL);
  ASSERT_EQ(square.factors().size(), 1u);
  EXPECT_EQ(square.factors()[0], (PrimePower{3037000493LL, 2}));
  EXPECT_EQ(factorise(1000003LL * 1000003LL * 1000033LL).big_omega(), 3);
}

TEST(Factorise, RandomProductsRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::int64_t>(rng() >> 1) | 1;
    const PrimeFactorisation f = factorise(n);
    __int128 product = 1;
    for (const auto& [p, e] : f.factors()) {
      for (int i = 0; i < e; ++i) product *= p;
      ASSERT_EQ(factorise(p).big_omega(), 1) << p;
    }
    ASSERT_EQ(product, n);
  }
}

// ---------------------------------------------------------------------------
// Moebius

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(modified_mobius(1), 0);
  EXPECT_EQ(modified_mobius(6), 1);
  EXPECT_EQ(modified_mobius(8), 0);
  EXPECT_EQ(modified_mobius(7), -1);
}

TEST(Mobius, ModifiedDiffersOnlyAtOne) {
  for (std::int64_t n = 2; n <= 2000; ++n) EXPECT_EQ(modified_mobius(n), mobius(n));
  EXPECT_THROW(modified_mobius(0), DomainError);
}

// ---------------------------------------------------------------------------
// Convolution

TEST(Convolution, IdentityIsNeutral) {
  const ArithmeticFunction e = identity_function();
  const ArithmeticFunction f([](std::int64_t n) { return Integer(n * n - 3 * n + 1); });
  const ArithmeticFunction left = convolve(e, f);
  const ArithmeticFunction right = convolve(f, e);
  for (std::int64_t n = 1; n <= 1000; ++n) {
    EXPECT_EQ(left(n), f(n));
    EXPECT_EQ(right(n), f(n));
  }
}

TEST(Convolution, MobiusInvertsOne) {
  const ArithmeticFunction product = convolve(mobius_function(), constant_one_function());
  for (std::int64_t n = 1; n <= 10000; ++n) ASSERT_EQ(product(n), n == 1 ? 1 : 0) << n;
}

TEST(Convolution, OneWithOneCountsDivisors) {
  EXPECT_EQ(convolve(constant_one_function(), constant_one_function())(12), 6);
}

TEST(Convolution, PowerExamples) {
  const ArithmeticFunction one = constant_one_function();
  EXPECT_EQ(convolution_power(one, 0)(5), 0);
  EXPECT_EQ(convolution_power(one, 0)(1), 1);
  EXPECT_EQ(convolution_power(one, 2)(12), 6);
  const ArithmeticFunction one_minus_e = one - identity_function();
  EXPECT_EQ(convolution_power(one_minus_e, 3)(12), 3);
  EXPECT_THROW(convolution_power(one, -1), DomainError);
}

TEST(Convolution, MemoisationIsStable) {
  int calls = 0;
  const ArithmeticFunction f([&calls](std::int64_t n) {
    ++calls;
    return Integer(n + 1);
  });
  EXPECT_EQ(f(10), 11);
  EXPECT_EQ(f(10), 11);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(f.cache_size(), 1u);
  const ArithmeticFunction copy = f;
  EXPECT_EQ(copy(10), 11);
  EXPECT_EQ(calls, 1);
}

TEST(Convolution, OverflowIsReported) {
  const ArithmeticFunction huge([](std::int64_t) { return Integer::from_raw(Integer::Raw{1} << 100); });
  EXPECT_THROW(convolve(huge, huge)(2), OverflowError);
}

// Random memoised functions with values in [-50, 50].
ArithmeticFunction random_function(std::uint64_t seed) {
  return ArithmeticFunction([seed](std::int64_t n) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL));
    return Integer(static_cast<std::int64_t>(rng() % 101) - 50);
  });
}

TEST(ConvolutionProperty, CommutativeAndAssociative) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    const ArithmeticFunction f = random_function(rng());
    const ArithmeticFunction g = random_function(rng());
    const ArithmeticFunction h = random_function(rng());
    const ArithmeticFunction fg = convolve(f, g);
    const ArithmeticFunction gf = convolve(g, f);
    const ArithmeticFunction left = convolve(fg, h);
    const ArithmeticFunction right = convolve(f, convolve(g, h));
    // Sample the range 1..500 so 100 trials stay cheap; every trial hits n = 1 and 360.
    for (std::int64_t n : {std::int64_t{1}, std::int64_t{360}}) {
      ASSERT_EQ(fg(n), gf(n));
      ASSERT_EQ(left(n), right(n));
    }
    for (int k = 0; k < 20; ++k) {
      const auto n = static_cast<std::int64_t>(rng() % 500 + 1);
      ASSERT_EQ(fg(n), gf(n)) << "n=" << n;
      ASSERT_EQ(left(n), right(n)) << "n=" << n;
    }
  }
}

TEST(ConvolutionProperty, ExhaustiveToFiveHundred) {
  const ArithmeticFunction f = random_function(1);
  const ArithmeticFunction g = random_function(2);
  const ArithmeticFunction h = random_function(3);
  const ArithmeticFunction fg = convolve(f, g);
  const ArithmeticFunction gf = convolve(g, f);
  const ArithmeticFunction left = convolve(fg, h);
  const ArithmeticFunction right = convolve(f, convolve(g, h));
  for (std::int64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(fg(n), gf(n));
    ASSERT_EQ(left(n), right(n));
  }
}

TEST(ConvolutionProperty, MatchesNaiveDivisorSum) {
  const ArithmeticFunction f = random_function(11);
  const ArithmeticFunction g = random_function(12);
  const ArithmeticFunction fg = convolve(f, g);
  for (std::int64_t n = 1; n <= 500; ++n) {
    Integer expected;
    for (const std::int64_t d : oracle::divisors_naive(n)) expected += f(d) * g(n / d);
    ASSERT_EQ(fg(n), expected);
  }
}

TEST(Convolution, ConcurrentEvaluationAgrees) {
  const ArithmeticFunction f = convolve(constant_one_function(), mobius_function());
  std::vector<std::thread> workers;
  std::vector<int> failures(4, 0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::int64_t n = 1; n <= 3000; ++n) {
        if (f(n) != (n == 1 ? 1 : 0)) ++failures[static_cast<std::size_t>(t)];
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const int fails : failures) EXPECT_EQ(fails, 0);
}

// ---------------------------------------------------------------------------
// Divisor families

TEST(ClassicalDivisor, Examples) {
  EXPECT_EQ(classical_divisor(0, 1), 1);
  EXPECT_EQ(classical_divisor(0, 2), 0);
  EXPECT_EQ(classical_divisor(2, 12), 6);
  EXPECT_EQ(2 * classical_divisor(2, 12) - 4, 8);
}

TEST(ClassicalDivisor, EqualsConvolutionPowerOfOne) {
  const ArithmeticFunction one = constant_one_function();
  for (int j = 0; j <= 6; ++j) {
    const ArithmeticFunction power = convolution_power(one, j);
    for (std::int64_t n = 1; n <= 500; ++n) ASSERT_EQ(classical_divisor(j, n), power(n)) << j << ' ' << n;
  }
}

TEST(ClassicalDivisor, SumOverDivisorsRecurrence) {
  for (int j = 0; j <= 6; ++j) {
    for (std::int64_t n = 1; n <= 500; ++n) {
      Integer sum;
      for (const std::int64_t m : oracle::divisors_naive(n)) sum += classical_divisor(j, m);
      ASSERT_EQ(classical_divisor(j + 1, n), sum);
    }
  }
}

TEST(ClassicalDivisor, MatchesBruteForce) {
  for (int j = 0; j <= 4; ++j) {
    for (std::int64_t n = 1; n <= 200; ++n) {
      ASSERT_EQ(classical_divisor(j, n), wide(oracle::ordered_factorisations(n, j, 1)));
    }
  }
}

TEST(NontrivialDivisor, Examples) {
  EXPECT_EQ(nontrivial_divisor(2, 12), 4);
  EXPECT_EQ(nontrivial_divisor(3, 12), 3);
  EXPECT_EQ(nontrivial_divisor(4, 12), 0);
  EXPECT_EQ(nontrivial_divisor(0, 1), 1);
  EXPECT_EQ(nontrivial_divisor(0, 5), 0);
}

TEST(NontrivialDivisor, RecurrenceOverProperDivisors) {
  for (int j = 0; j <= 6; ++j) {
    for (std::int64_t n = 1; n <= 500; ++n) {
      Integer sum;
      for (const std::int64_t m : oracle::divisors_naive(n)) {
        if (m < n) sum += nontrivial_divisor(j, m);
      }
      ASSERT_EQ(nontrivial_divisor(j + 1, n), sum);
    }
  }
}

TEST(NontrivialDivisor, EqualsConvolutionPowerAndBruteForce) {
  const ArithmeticFunction one_minus_e = constant_one_function() - identity_function();
  for (int j = 0; j <= 5; ++j) {
    const ArithmeticFunction power = convolution_power(one_minus_e, j);
    for (std::int64_t n = 1; n <= 300; ++n) {
      ASSERT_EQ(nontrivial_divisor(j, n), power(n));
      ASSERT_EQ(nontrivial_divisor(j, n), wide(oracle::ordered_factorisations(n, j, 2)));
    }
  }
}

TEST(NontrivialDivisor, VanishesAboveOmega) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const int omega = big_omega(n);
    ASSERT_EQ(nontrivial_divisor(omega + 1, n), 0) << n;
    ASSERT_EQ(nontrivial_divisor(omega + 2, n), 0) << n;
  }
}

TEST(AssociatedDivisor, Examples) {
  // (c_2 * 1)(12) = c_2(4) + c_2(6) + c_2(12) = 1 + 2 + 4.
  EXPECT_EQ(associated_divisor(2, 1, 12), 7);
  EXPECT_EQ(associated_divisor(2, 1, 12), wide(oracle::mixed_factorisations(12, 2, 1)));
  EXPECT_EQ(associated_divisor(2, -2, 12), -2);
  EXPECT_EQ(associated_divisor(3, -3, 12), 3);
}

TEST(AssociatedDivisor, SpecialIndices) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    for (int j = 0; j <= 4; ++j) ASSERT_EQ(associated_divisor(j, 0, n), nontrivial_divisor(j, n));
    for (int r = 0; r <= 4; ++r) ASSERT_EQ(associated_divisor(0, r, n), classical_divisor(r, n));
  }
}

TEST(AssociatedDivisor, PositiveIndexCountsMixedFactorisations) {
  for (int j = 0; j <= 3; ++j) {
    for (int r = 0; r <= 3; ++r) {
      for (std::int64_t n = 1; n <= 120; ++n) {
        ASSERT_EQ(associated_divisor(j, r, n), wide(oracle::mixed_factorisations(n, j, r)));
      }
    }
  }
}

TEST(AssociatedDivisor, ThreeTermRecurrence) {
  // c_{k+1}^{(r)} = c_k^{(r+1)} - c_k^{(r)}
  for (int k = 0; k <= 5; ++k) {
    for (int r = -5; r <= 5; ++r) {
      for (std::int64_t n = 1; n <= 500; ++n) {
        ASSERT_EQ(associated_divisor(k + 1, r, n),
                  associated_divisor(k, r + 1, n) - associated_divisor(k, r, n))
            << "k=" << k << " r=" << r << " n=" << n;
      }
    }
  }
}

TEST(AssociatedDivisor, BinomialExpansion) {
  // c_j^{(r)} = sum_i C(r, i) c_{j+i}
  for (int j = 0; j <= 5; ++j) {
    for (int r = 0; r <= 5; ++r) {
      for (std::int64_t n = 1; n <= 500; ++n) {
        Integer sum;
        for (int i = 0; i <= r; ++i) sum += binomial(r, i) * nontrivial_divisor(j + i, n);
        ASSERT_EQ(associated_divisor(j, r, n), sum);
      }
    }
  }
}

TEST(SquarefreeOrderedCount, Examples) {
  EXPECT_EQ(squarefree_ordered_count(0, 1), 1);
  EXPECT_EQ(squarefree_ordered_count(0, 6), 0);
  EXPECT_EQ(squarefree_ordered_count(2, 12), -2);
  EXPECT_EQ(squarefree_ordered_count(3, 12), 3);
}

TEST(SquarefreeOrderedCount, MatchesAssociatedAndCombinatorialOracle) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    const int omega = big_omega(n);
    for (int L = 0; L <= omega + 2; ++L) {
      const Integer value = squarefree_ordered_count(L, n);
      ASSERT_EQ(value, associated_divisor(L, -L, n)) << L << ' ' << n;
      ASSERT_EQ(value, wide(oracle::signed_squarefree_factorisations(n, L))) << L << ' ' << n;
      if (L > omega) ASSERT_EQ(value, 0);
    }
  }
}

TEST(SquarefreeOrderedCount, SignedPowerOfModifiedMobius) {
  const ArithmeticFunction mu_minus_e = modified_mobius_function();
  for (int L = 0; L <= 4; ++L) {
    const ArithmeticFunction power = convolution_power(mu_minus_e, L);
    const int sign = L % 2 == 0 ? 1 : -1;
    for (std::int64_t n = 1; n <= 300; ++n) ASSERT_EQ(squarefree_ordered_count(L, n), sign * power(n));
  }
}

TEST(DivisorFunctions, NegativeIndexRejected) {
  EXPECT_THROW(classical_divisor(-1, 5), DomainError);
  EXPECT_THROW(nontrivial_divisor(-1, 5), DomainError);
  EXPECT_THROW(associated_divisor(-1, 0, 5), DomainError);
  EXPECT_THROW(squarefree_ordered_count(-1, 5), DomainError);
  EXPECT_THROW(nontrivial_divisor(2, 0), DomainError);
}

}  // namespace
}  // namespace sumsys
