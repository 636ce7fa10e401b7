#include "critgroup/graphs.hpp"
#include "critgroup/matforms.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

using namespace critgroup;
using graphs::Coupling;
using graphs::Family;
using graphs::Side;

namespace {

bool is_regular(const Multigraph& g, std::int64_t degree) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != degree) return false;
  return true;
}

}  // namespace

TEST(Multigraph, Validation) {
  EXPECT_THROW(Multigraph(2, {0, 1, 2, 0}), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {0, -1, -1, 0}), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(Multigraph(2, {0, 1, 1, 0}, 2), std::out_of_range);
  Multigraph g(3);
  EXPECT_THROW(g.add_edges(1, 1), std::invalid_argument);
  g.add_edges(0, 2, 4);
  EXPECT_EQ(g.multiplicity(2, 0), 4);
  EXPECT_EQ(g.edge_count(), 4);
}

TEST(Builders, Basic) {
  EXPECT_EQ(graphs::path(2).edge_count(), 1);
  EXPECT_TRUE(is_regular(graphs::cycle(4), 2));
  EXPECT_EQ(graphs::complete(4).edge_count(), 6);
  EXPECT_THROW(graphs::path(1), std::invalid_argument);
  EXPECT_THROW(graphs::cycle(2), std::invalid_argument);
  EXPECT_THROW(graphs::complete(1), std::invalid_argument);
  EXPECT_EQ(graphs::cycle(5).multiplicity(4, 0), 1);
}

TEST(Builders, TwoPartFamilies) {
  const auto k33 = graphs::cuv(Side::Independent, Side::Independent, Coupling::Complete, 3);
  EXPECT_EQ(k33.edge_count(), 9);
  EXPECT_EQ(k33.multiplicity(0, 1), 0);
  EXPECT_EQ(k33.multiplicity(0, 4), 1);

  const auto l33 = graphs::cuv(Side::Independent, Side::Independent, Coupling::MinusMatching, 3);
  EXPECT_TRUE(is_regular(l33, 2));
  EXPECT_EQ(l33.edge_count(), 6);
  EXPECT_EQ(graphs::critical_group(graphs::cone(l33, 1)).to_string(), "Z8 + Z40");

  for (std::size_t m = 2; m <= 5; ++m) {
    const auto prism = graphs::cuv(Side::Clique, Side::Clique, Coupling::Matching, m);
    const auto product = graphs::cartesian_product(graphs::complete(2), graphs::complete(m));
    // product numbers (i,j) as i*m + j, so the K_2 coordinate selects the block
    EXPECT_EQ(prism, product);
    EXPECT_EQ(graphs::cuv(Side::Clique, Side::Clique, Coupling::Complete, m), graphs::complete(2 * m));
    EXPECT_EQ(graphs::cuv(Side::Independent, Side::Independent, Coupling::Matching, m).edge_count(),
              static_cast<std::int64_t>(m));
  }
  EXPECT_THROW(graphs::cuv(Side::Clique, Side::Clique, Coupling::Matching, 1), std::invalid_argument);
}

TEST(Operations, DuplicateAndCone) {
  EXPECT_EQ(graphs::duplicate(graphs::path(2), 3).multiplicity(0, 1), 3);
  EXPECT_EQ(graphs::duplicate(graphs::cycle(5), 1), graphs::cycle(5));
  EXPECT_EQ(graphs::laplacian(graphs::duplicate(graphs::cycle(4), 2)), graphs::laplacian(graphs::cycle(4)) * BigInt(2));
  EXPECT_THROW(graphs::duplicate(graphs::path(2), 0), std::invalid_argument);

  const auto tri = graphs::cone(graphs::path(2), 1);
  EXPECT_EQ(tri.sink(), 2u);
  Multigraph k3 = graphs::complete(3);
  k3.set_sink(2);
  EXPECT_EQ(tri, k3);

  const auto wheel = graphs::cone(graphs::cycle(4), 1);
  EXPECT_EQ(wheel.vertex_count(), 5u);
  EXPECT_EQ(wheel.degree(4), 4);
  EXPECT_EQ(graphs::spanning_tree_count(wheel), 45);
  EXPECT_EQ(graphs::spanning_tree_count(graphs::cone(graphs::cycle(6), 1)), 320);
  EXPECT_THROW(graphs::cone(graphs::path(2), -1), std::invalid_argument);
}

TEST(Laplacian, Examples) {
  EXPECT_EQ(graphs::laplacian(graphs::path(2)), IntMatrix::from_rows({{1, -1}, {-1, 1}}));
  EXPECT_EQ(graphs::reduced_laplacian(graphs::cone(graphs::path(2), 1)), IntMatrix::from_rows({{2, -1}, {-1, 2}}));
  EXPECT_THROW(graphs::reduced_laplacian(graphs::path(3)), std::invalid_argument);
  for (std::size_t n = 2; n <= 7; ++n) {
    auto tree = graphs::path(n);
    tree.set_sink(0);
    EXPECT_EQ(graphs::spanning_tree_count(tree), 1);
    const auto lap = graphs::laplacian(graphs::complete(n));
    for (std::size_t i = 0; i < n; ++i) {
      BigInt sum = 0;
      for (const auto& x : lap.row(i)) sum += x;
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(Laplacian, ConeAddsMultipleOfIdentity) {
  for (Family f : graphs::kAllFamilies)
    for (std::size_t size = std::max<std::size_t>(graphs::family_min_size(f), 3); size <= 5; ++size)
      for (std::int64_t k = 0; k <= 3; ++k) {
        const auto g = graphs::duplicate(graphs::family_base(f, size), 2);
        EXPECT_EQ(graphs::reduced_laplacian(graphs::cone(g, k)),
                  graphs::laplacian(g) + IntMatrix::identity(g.vertex_count()) * BigInt(static_cast<long>(k)));
      }
}

TEST(Laplacian, ConeCompleteMatchesParametricMatrix) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (long l = 1; l <= 3; ++l)
      for (long m = 0; m <= 3; ++m)
        EXPECT_EQ(graphs::reduced_laplacian(graphs::cone(graphs::duplicate(graphs::complete(n), l), m)),
                  matforms::build({matforms::Kind::K, n, BigInt(m + static_cast<long>(n) * l), BigInt(-l)}));
}

TEST(Operations, PermutationAndUnion) {
  const auto g = graphs::disjoint_union(graphs::path(2), graphs::cycle(3));
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 4);
  std::vector<std::size_t> perm(5);
  std::iota(perm.rbegin(), perm.rend(), 0);
  const auto h = graphs::permuted(g, perm);
  EXPECT_EQ(h.multiplicity(4, 3), 1);
  EXPECT_EQ(h.edge_count(), 4);
}

TEST(Families, ParseAndNames) {
  for (Family f : graphs::kAllFamilies) {
    EXPECT_EQ(graphs::parse_family(graphs::family_name(f)), f);
    EXPECT_EQ(graphs::parse_family("cone-" + std::string(graphs::family_name(f))), f);
  }
  EXPECT_THROW(graphs::parse_family("wheel"), std::invalid_argument);
  const auto inst = graphs::family_instance(Family::Kmm, 3, 2, 1);
  EXPECT_EQ(inst.vertex_count(), 7u);
  EXPECT_EQ(inst.multiplicity(0, 3), 2);
  EXPECT_EQ(inst.multiplicity(0, 6), 1);
}
