#include "critgroup/exactlin.hpp"
#include "critgroup/graphs.hpp"
#include "critgroup/matforms.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace critgroup;
using matforms::BipartiteId;
using matforms::Kind;
using matforms::KnElement;

namespace {

IntMatrix random_square(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

}  // namespace

TEST(Build, Definitions) {
  EXPECT_EQ(matforms::build({Kind::T, 3, 2, 1}), IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
  EXPECT_EQ(matforms::build({Kind::P, 3, 1, 1}), IntMatrix::from_rows({{2, 1, 0}, {1, 1, 1}, {0, 1, 2}}));
  EXPECT_EQ(matforms::build({Kind::K, 3, 3, 1}), IntMatrix::from_rows({{4, 1, 1}, {1, 4, 1}, {1, 1, 4}}));
  EXPECT_EQ(matforms::build({Kind::C, 4, 5, 2}),
            IntMatrix::from_rows({{5, 2, 0, 2}, {2, 5, 2, 0}, {0, 2, 5, 2}, {2, 0, 2, 5}}));
  EXPECT_THROW(matforms::build({Kind::C, 2, 1, 1}), std::invalid_argument);
  EXPECT_THROW(matforms::build({Kind::T, 1, 1, 1}), std::invalid_argument);
  EXPECT_EQ(matforms::parse_kind("P"), Kind::P);
  EXPECT_THROW(matforms::parse_kind("Q"), std::invalid_argument);
}

TEST(Build, CompleteKindIsGraphMatrix) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        IntMatrix expected = graphs::complete(n).adjacency() * BigInt(b);
        for (std::size_t i = 0; i < n; ++i) expected(i, i) += a + b;
        EXPECT_EQ(matforms::build({Kind::K, n, a, b}), expected);
      }
}

TEST(ClaimedDiagonal, Examples) {
  EXPECT_EQ(matforms::claimed_diagonal({Kind::T, 3, 2, 1}).materialize(), IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 4}}));
  const auto k = matforms::claimed_diagonal({Kind::K, 3, 3, 1}).materialize();
  EXPECT_EQ(snf(k).diagonal, (std::vector<BigInt>{1, 3, 18}));

  const auto c = matforms::claimed_diagonal({Kind::C, 6, 3, -1});
  ASSERT_TRUE(c.block.has_value());
  EXPECT_EQ(*c.block, IntMatrix::from_rows({{24, -16}, {-16, 24}}));
  EXPECT_EQ(critical_group(c.materialize()).to_string(), "Z8 + Z40");
  EXPECT_THROW(matforms::claimed_diagonal({Kind::C, 3, 1, 1}), std::invalid_argument);
}

TEST(ClaimedDiagonal, GcdScalingAndZero) {
  // r = gcd(a, b) = 0 leaves the zero matrix, whose cokernel is free
  EXPECT_EQ(critical_group(matforms::claimed_diagonal({Kind::T, 4, 0, 0}).materialize()).to_string(),
            "Z + Z + Z + Z");
  for (Kind kind : {Kind::T, Kind::P, Kind::K, Kind::C})
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        const matforms::ParamMatrixSpec spec{kind, 6, a, b};
        EXPECT_EQ(critical_group(matforms::build(spec)), critical_group(matforms::claimed_diagonal(spec).materialize()))
            << matforms::kind_name(kind) << " a=" << a << " b=" << b;
      }
}

TEST(ClaimedDiagonal, TheoremFormNeedsCoprime) {
  EXPECT_THROW(matforms::theorem_form({Kind::T, 4, 2, 4}), std::invalid_argument);
  EXPECT_NO_THROW(matforms::theorem_form({Kind::T, 4, 3, 4}));
}

TEST(KnRing, Laws) {
  const KnElement x{3, 0, 1}, y{3, -3, 1};
  EXPECT_EQ(matforms::kn_mul(x, y), (KnElement{3, 0, 0}));
  const KnElement k4{4, 4, -1};
  const auto cube = matforms::kn_pow(k4, 3);
  EXPECT_EQ(cube, (KnElement{4, 64, -16}));
  EXPECT_EQ(cube.materialize(), k4.materialize() * BigInt(16));
  EXPECT_EQ(matforms::kn_mul(k4, matforms::kn_identity(4)), k4);
  EXPECT_EQ(matforms::kn_identity(3).materialize(), IntMatrix::identity(3));
  EXPECT_THROW(matforms::kn_mul(KnElement{2, 1, 1}, KnElement{3, 1, 1}), std::invalid_argument);
  EXPECT_THROW(matforms::kn_add(KnElement{2, 1, 1}, KnElement{3, 1, 1}), std::invalid_argument);
  EXPECT_THROW(matforms::kn_pow(k4, -1), std::invalid_argument);
}

TEST(KnRing, MatchesMatrixArithmetic) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto draw = [&] { return BigInt(static_cast<long>(rng() % 19) - 9); };
    const KnElement x{n, draw(), draw()}, y{n, draw(), draw()};
    const BigInt c = draw();
    EXPECT_EQ(matforms::kn_mul(x, y).materialize(), x.materialize() * y.materialize());
    EXPECT_EQ(matforms::kn_mul(x, y), matforms::kn_mul(y, x));
    EXPECT_EQ(matforms::kn_add(x, y).materialize(), x.materialize() + y.materialize());
    EXPECT_EQ(matforms::kn_scale(c, x).materialize(), x.materialize() * c);
    IntMatrix power = IntMatrix::identity(n);
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(matforms::kn_pow(x, m).materialize(), power);
      power = power * x.materialize();
    }
  }
}

TEST(Phi, ShapesAndExamples) {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      EXPECT_EQ(matforms::phi(3, IntMatrix::from_rows({{a}}), IntMatrix::from_rows({{b}})),
                matforms::build({Kind::K, 3, a, b}));
  const auto six = matforms::phi(3, IntMatrix::from_rows({{3, 1}, {1, 3}}), IntMatrix::from_rows({{0, -1}, {-1, 0}}));
  EXPECT_EQ(six.rows(), 6u);
  EXPECT_EQ(det(six), 320);

  const auto a = IntMatrix::from_rows({{1, 2}, {3, 4}}), b = IntMatrix::from_rows({{5, 6}, {7, 8}});
  const IntMatrix expected(4, 4, {1, 2, 5, 6, 3, 4, 7, 8, 0, 0, 11, 14, 0, 0, 17, 20});
  EXPECT_EQ(matforms::phi_reduced(2, a, b), expected);
  EXPECT_THROW(matforms::phi(1, a, b), std::invalid_argument);
  EXPECT_THROW(matforms::phi(2, a, IntMatrix::identity(3)), std::invalid_argument);
  EXPECT_THROW(matforms::phi(2, IntMatrix(2, 3), IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Phi, ReductionPreservesGroup) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t m = 2 + rng() % 4, n = 1 + rng() % 3;
    const IntMatrix a = random_square(rng, n, 9), b = random_square(rng, n, 9);
    EXPECT_EQ(snf(matforms::phi(m, a, b)).diagonal, snf(matforms::phi_reduced(m, a, b)).diagonal);
  }
}

TEST(Bipartite, LiteralDefinitionAgainstGraphs) {
  for (std::size_t m = 2; m <= 5; ++m) {
    // regular families: a I + b A(G)
    for (BipartiteId id : {BipartiteId::K_mm, BipartiteId::L_mm, BipartiteId::L_MM, BipartiteId::M_MM}) {
      const auto g = graphs::family_base(matforms::bipartite_family(id), m);
      EXPECT_EQ(matforms::bipartite_matrix(id, m, 5, -2),
                IntMatrix::identity(2 * m) * BigInt(5) + g.adjacency() * BigInt(-2));
      EXPECT_EQ(matforms::bipartite_phi_form(id, m, 5, -2), matforms::bipartite_matrix(id, m, 5, -2));
    }
    // weighted diagonal on the v block
    const auto km = matforms::bipartite_matrix(BipartiteId::K_mM, m, 3, 1);
    EXPECT_EQ(km(0, 0), 3);
    EXPECT_EQ(km(m, m), 6);
    EXPECT_EQ(matforms::bipartite_matrix(BipartiteId::M_mM, m, 2, 1)(m, m), 2 * static_cast<long>(m + 1));
  }
  EXPECT_EQ(matforms::bipartite_matrix(BipartiteId::K_mm, 3, 7, 1),
            matforms::phi(3, IntMatrix::from_rows({{7, 0}, {0, 7}}), IntMatrix::from_rows({{0, 1}, {1, 0}})));
}

TEST(Bipartite, PhiRepresentationShiftsDiagonal) {
  // For the non-regular families the Phi_m(A,B) of the reduction has v-block
  // diagonal 2a + b (resp. (m+1)a + b), one b more than the definition.
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto lit = matforms::bipartite_matrix(BipartiteId::K_mM, m, 3, 1);
    const auto phi = matforms::bipartite_phi_form(BipartiteId::K_mM, m, 3, 1);
    EXPECT_EQ(phi(m, m), lit(m, m) + 1);
    EXPECT_EQ(phi(0, 0), lit(0, 0));
    EXPECT_EQ(matforms::bipartite_matrix(BipartiteId::K_mM, m, 3, 0), matforms::bipartite_phi_form(BipartiteId::K_mM, m, 3, 0));
  }
}

TEST(Bipartite, ClaimedFormsAsDisplayed) {
  const auto pair = matforms::claimed_form_bipartite(BipartiteId::L_mm, 3, 3, -1);
  EXPECT_EQ(det(pair.original), 320);
  EXPECT_EQ(det(pair.claimed), 432);
  const auto mm = matforms::bipartite_claimed(BipartiteId::M_MM, 4, 3, 1);
  EXPECT_EQ(mm.rows(), 9u);
  EXPECT_EQ(matforms::bipartite_claimed(BipartiteId::K_mm, 3, 2, 1).rows(), 6u);
  for (BipartiteId id : matforms::kAllBipartite) EXPECT_THROW(matforms::bipartite_matrix(id, 1, 1, 1), std::invalid_argument);
}

TEST(Bipartite, CompleteBipartiteClaimHolds) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        if (gcd(BigInt(a), BigInt(b)) != 1) continue;
        const auto pair = matforms::claimed_form_bipartite(BipartiteId::K_mm, m, a, b);
        EXPECT_EQ(critical_group(pair.original), critical_group(pair.claimed)) << m << " " << a << " " << b;
      }
}
