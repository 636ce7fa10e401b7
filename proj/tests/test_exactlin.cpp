#include "critgroup/exactlin.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace critgroup;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

// Product of at most `steps` elementary row operations, applied to I.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 1) return (rng() & 1) ? u : u * BigInt(-1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
    switch (rng() % 3) {
      case 0: u.swap_rows(i, j); break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
        break;
      default: {
        const long k = static_cast<long>(rng() % 7) - 3;
        for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
      }
    }
  }
  return u;
}

}  // namespace

TEST(Snf, SpecExamples) {
  EXPECT_EQ(snf(IntMatrix::identity(3)).diagonal, big({1, 1, 1}));
  EXPECT_EQ(snf(IntMatrix::from_rows({{2, 4}, {6, 8}})).diagonal, big({2, 4}));
  EXPECT_EQ(snf(IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})).diagonal, big({1, 1, 4}));
}

TEST(Snf, RectangularAndZero) {
  EXPECT_EQ(snf(IntMatrix(2, 3)).diagonal, big({0, 0}));
  const auto s = snf(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}}));
  EXPECT_EQ(s.diagonal, big({1, 6}));
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_EQ(snf(IntMatrix::from_rows({{-5}})).diagonal, big({5}));
  EXPECT_EQ(snf(IntMatrix::from_rows({{0, 0}, {0, 7}})).diagonal, big({7, 0}));
}

TEST(Snf, ChainRepairMergesCoprimeEntries) {
  EXPECT_EQ(snf(IntMatrix::from_rows({{4, 0}, {0, 6}})).diagonal, big({2, 12}));
  EXPECT_EQ(snf(IntMatrix::from_rows({{0, 0, 0}, {0, 4, 0}, {0, 0, 6}})).diagonal, big({2, 12, 0}));
}

TEST(Det, Examples) {
  EXPECT_EQ(det(IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})), 4);
  IntMatrix c6(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    c6(i, i) = 3;
    c6(i, (i + 1) % 6) = -1;
    c6((i + 1) % 6, i) = -1;
  }
  EXPECT_EQ(det(c6), 320);
  EXPECT_EQ(det(IntMatrix::identity(5)), 1);
  EXPECT_EQ(det(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(det(IntMatrix::from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_THROW(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(MinorGcd, Examples) {
  const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  EXPECT_EQ(minor_gcd(m, 1), 2);
  EXPECT_EQ(minor_gcd(m, 2), 8);
  EXPECT_EQ(minor_gcd(IntMatrix::identity(3), 2), 1);
  EXPECT_THROW(minor_gcd(m, 0), std::out_of_range);
  EXPECT_THROW(minor_gcd(m, 3), std::out_of_range);
  EXPECT_THROW(minor_gcd(IntMatrix(7, 7), 1), std::invalid_argument);
}

TEST(RankModP, Basic) {
  const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  EXPECT_EQ(rank_mod_p(m, 2), 0u);
  EXPECT_EQ(rank_mod_p(m, 3), 2u);
  EXPECT_EQ(rank_mod_p(IntMatrix::from_rows({{1, 2}, {2, 4}}), 5), 1u);
  EXPECT_EQ(rank_mod_p(IntMatrix::from_rows({{-1, 0}, {0, -7}}), 7), 1u);
}

TEST(LocalValuations, MatchesSmithForm) {
  const auto m = IntMatrix::from_rows({{4, 0, 0}, {0, 6, 0}, {0, 0, 8}});
  EXPECT_EQ(local_valuations(m, BigInt(2)), (std::vector<unsigned long>{1, 2, 3}));
  EXPECT_EQ(local_valuations(m, BigInt(3)), (std::vector<unsigned long>{0, 0, 1}));
  EXPECT_THROW(local_valuations(IntMatrix::from_rows({{1, 2}, {2, 4}}), BigInt(2)), std::invalid_argument);
}

TEST(PrimeDivisors, Basic) {
  EXPECT_EQ(prime_divisors(BigInt(360)), big({2, 3, 5}));
  EXPECT_EQ(prime_divisors(BigInt(-49)), big({7}));
  EXPECT_TRUE(prime_divisors(BigInt(0)).empty());
  EXPECT_TRUE(prime_divisors(BigInt(1)).empty());
  EXPECT_EQ(prime_divisors(BigInt(2) * BigInt("1000000007")), big({2, 1000000007}));
}

TEST(AbelianGroup, Canonicalize) {
  EXPECT_EQ(canonicalize({2, 3}).factors(), big({6}));
  EXPECT_EQ(canonicalize({4, 6}).factors(), big({2, 12}));
  EXPECT_EQ(canonicalize({0, 5}).factors(), big({5, 0}));
  EXPECT_EQ(canonicalize({0, 5}).to_string(), "Z5 + Z");
  EXPECT_EQ(canonicalize({1, 1, -3}).factors(), big({3}));
  EXPECT_EQ(canonicalize({1}).to_string(), "0");
  EXPECT_EQ(canonicalize({8, 40}).to_string(), "Z8 + Z40");
}

TEST(AbelianGroup, OrderAndEquality) {
  EXPECT_EQ(*group_order(canonicalize({4, 4})), 16);
  EXPECT_FALSE(group_order(canonicalize({0})).has_value());
  EXPECT_EQ(order_string(group_order(canonicalize({0}))), "INFINITE");
  EXPECT_EQ(*group_order(canonicalize({8, 40})), 320);
  EXPECT_TRUE(group_eq(canonicalize({6}), canonicalize({2, 3})));
  EXPECT_FALSE(group_eq(canonicalize({4}), canonicalize({2, 2})));
  EXPECT_TRUE(group_eq(canonicalize({3, 15}), canonicalize({3, 15})));
}

TEST(AbelianGroup, RanksAndTorsion) {
  const auto g = canonicalize({2, 4, 0, 0});
  EXPECT_EQ(g.free_rank(), 2u);
  EXPECT_FALSE(g.is_finite());
  EXPECT_EQ(g.torsion().to_string(), "Z2 + Z4");
  EXPECT_EQ(g.p_rank(BigInt(2)), 4u);
  EXPECT_EQ(g.p_rank(BigInt(3)), 2u);
  EXPECT_TRUE(canonicalize({1}).is_trivial());
}

TEST(CriticalGroup, Examples) {
  EXPECT_EQ(critical_group(IntMatrix::from_rows({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}})).to_string(), "Z4 + Z4");
  EXPECT_EQ(critical_group(IntMatrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}})).to_string(), "Z");
  EXPECT_EQ(critical_group(IntMatrix(1, 1)).to_string(), "Z");
  // cokernel of the transpose: a 2x3 matrix of rank 2 leaves one free factor
  EXPECT_EQ(critical_group(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}})).to_string(), "Z6 + Z");
}

TEST(SnfProperty, AgreesWithMinorGcdOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 10);
    const auto s = snf(m);
    for (std::size_t i = 1; i < s.diagonal.size(); ++i) EXPECT_TRUE(divides(s.diagonal[i - 1], s.diagonal[i]));
    for (const auto& d : s.diagonal) EXPECT_GE(sgn(d), 0);
    BigInt previous = 1;
    for (std::size_t i = 1; i <= s.diagonal.size(); ++i) {
      const BigInt delta = minor_gcd(m, i);
      if (sgn(previous) != 0) {
        EXPECT_EQ(s.diagonal[i - 1], divexact(delta, previous)) << m;
      }
      previous = delta;
    }
    EXPECT_EQ(group_from_diagonal(minor_gcd_factors(m), m.cols()), critical_group(s));
  }
}

TEST(SnfProperty, TransposeAndDeterminant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    const auto s = snf(m);
    EXPECT_EQ(s.diagonal, snf(m.transposed()).diagonal);
    BigInt product = 1;
    for (const auto& d : s.diagonal) product *= d;
    EXPECT_EQ(product, abs(det(m)));
  }
}

TEST(SnfProperty, UnimodularStability) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 10);
    const IntMatrix u = random_unimodular(rng, r, 20), v = random_unimodular(rng, c, 20);
    EXPECT_EQ(snf(u * m * v).diagonal, snf(m).diagonal);
  }
}

TEST(SnfProperty, LocalValuationsAgree) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const IntMatrix m = random_matrix(rng, n, n, 12);
    if (sgn(det(m)) == 0) continue;
    const auto s = snf(m);
    for (const BigInt& p : prime_divisors(det(m))) {
      std::vector<unsigned long> expected;
      for (const auto& d : s.diagonal) {
        BigInt rest;
        expected.push_back(mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()));
      }
      EXPECT_EQ(local_valuations(m, p), expected);
    }
  }
}

TEST(CanonicalizeProperty, IdempotentAndOrderPreserving) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> moduli;
    BigInt product = 1;
    bool infinite = false;
    for (std::size_t k = 0, len = rng() % 6; k < len; ++k) {
      const long v = static_cast<long>(rng() % 40);
      moduli.emplace_back(v);
      if (v == 0) infinite = true;
      else product *= v;
    }
    const auto g = canonicalize(moduli);
    EXPECT_EQ(canonicalize(g.factors()), g);
    const auto order = group_order(g);
    EXPECT_EQ(order.has_value(), !infinite);
    if (order) {
      EXPECT_EQ(*order, product);
    }
    for (std::size_t i = 1; i < g.factors().size(); ++i) EXPECT_TRUE(divides(g.factors()[i - 1], g.factors()[i]));
  }
}
