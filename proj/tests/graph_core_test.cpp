// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "domsuite/graph.hpp"
#include "domsuite/isomorphism.hpp"
#include "domsuite/products.hpp"
#include "oracle.hpp"

namespace domsuite {
namespace {

const Graph kP3 = make_named(GraphKind::path, 3);
const Graph kP4 = make_named(GraphKind::path, 4);
const Graph kC4 = make_named(GraphKind::cycle, 4);
const Graph kC5 = make_named(GraphKind::cycle, 5);
const Graph kK13 = make_named(GraphKind::star, 3);

VertexSet S(const Graph& g, std::initializer_list<Vertex> vs) { return VertexSet(g.order(), vs); }

TEST(VertexSet, BasicOperations) {
  VertexSet a(70, {0, 5, 69});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(69));
  EXPECT_FALSE(a.contains(68));
  a.erase(5);
  EXPECT_EQ(a.to_string(), "{0,69}");
  EXPECT_EQ(a.complement().size(), 68u);
  EXPECT_THROW(a.insert(70), InvalidVertexError);
  EXPECT_THROW(VertexSet(3, {3}), InvalidVertexError);
  EXPECT_THROW(VertexSet::from_mask(3, 0b1000), InvalidVertexError);
}

TEST(VertexSet, OrderIsSizeThenLexicographic) {
  EXPECT_LT(VertexSet(5, {4}), VertexSet(5, {0, 1}));
  EXPECT_LT(VertexSet(5, {0, 3}), VertexSet(5, {1, 2}));
  EXPECT_LT(VertexSet(5, {0, 2}), VertexSet(5, {0, 3}));
  EXPECT_EQ(VertexSet(5, {1, 2}) <=> VertexSet(5, {1, 2}), std::strong_ordering::equal);
}

TEST(Graph, ConstructionErrors) {
  EXPECT_THROW(Graph(0, {}), ConstructionError);
  EXPECT_THROW(Graph(2, {{0, 0}}), ConstructionError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InvalidVertexError);
  EXPECT_THROW(make_named(GraphKind::cycle, 2), ConstructionError);
  EXPECT_THROW(make_named(GraphKind::star, 0), ConstructionError);
  EXPECT_THROW(make_named(GraphKind::complete, 0), ConstructionError);
}

TEST(Graph, DuplicateEdgesIgnoredAndSymmetric) {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 0));
  EXPECT_EQ(g, kP3);
}

TEST(Graph, FromRowsRejectsAsymmetry) {
  std::vector<VertexSet> rows{VertexSet(2, {1}), VertexSet(2)};
  EXPECT_THROW(Graph::from_rows(rows), ConstructionError);
}

TEST(Graph, MakeNamed) {
  EXPECT_EQ(make_named(GraphKind::complete, 3).size(), 3u);
  EXPECT_EQ(kC5.size(), 5u);
  EXPECT_EQ(kK13.size(), 3u);
  EXPECT_EQ(kK13.order(), 4u);
  EXPECT_EQ(kK13.degree(0), 3u);
  EXPECT_TRUE(kC4.adjacent(3, 0));
  EXPECT_EQ(make_named(GraphKind::complete, 1).order(), 1u);
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(kC4, S(kC4, {0}), true), S(kC4, {3, 0, 1}));
  EXPECT_TRUE(neighborhood(kC4, S(kC4, {}), true).empty());
  EXPECT_TRUE(neighborhood(kC4, S(kC4, {}), false).empty());
  EXPECT_EQ(neighborhood(kP3, S(kP3, {1}), true), kP3.vertices());
  EXPECT_EQ(neighborhood(kP3, S(kP3, {1}), false), S(kP3, {0, 2}));
  EXPECT_THROW(neighborhood(kP3, VertexSet(5, {4}), true), InvalidVertexError);
}

TEST(PrivateNeighborhood, Examples) {
  EXPECT_EQ(private_neighborhood(kP3, 0, S(kP3, {0, 2})), S(kP3, {0}));
  EXPECT_EQ(private_neighborhood(kK13, 1, S(kK13, {1, 2})), S(kK13, {1}));
  EXPECT_EQ(private_neighborhood(kP4, 2, S(kP4, {0, 2})), S(kP4, {2, 3}));
  EXPECT_THROW(private_neighborhood(kP3, 1, S(kP3, {0})), PreconditionError);
}

TEST(ExternalPrivateNeighborhood, Examples) {
  EXPECT_TRUE(external_private_neighborhood(kP4, 0, S(kP4, {0, 2})).empty());
  EXPECT_EQ(external_private_neighborhood(kP4, 2, S(kP4, {0, 2})), S(kP4, {3}));
  EXPECT_EQ(external_private_neighborhood(kP3, 1, S(kP3, {1})), S(kP3, {0, 2}));
  EXPECT_THROW(external_private_neighborhood(kP3, 1, S(kP3, {0})), PreconditionError);
}

TEST(Irredundance, Examples) {
  EXPECT_TRUE(is_irredundant(kP3, S(kP3, {0, 2})));
  EXPECT_FALSE(is_irredundant(kP3, S(kP3, {0, 1})));
  EXPECT_TRUE(is_irredundant(kP3, S(kP3, {})));
  EXPECT_TRUE(is_open_irredundant(kC4, S(kC4, {0, 1})));
  EXPECT_FALSE(is_open_irredundant(kP3, S(kP3, {0, 2})));
  const Graph k2 = make_named(GraphKind::complete, 2);
  EXPECT_TRUE(is_open_irredundant(k2, S(k2, {0})));
}

TEST(RemoveClosedNeighborhood, Examples) {
  auto r = remove_closed_neighborhood(kC5, S(kC5, {0}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->graph, make_named(GraphKind::complete, 2));
  EXPECT_EQ(r->original, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(r->lift(VertexSet(2, {1}), 5), S(kC5, {3}));

  auto same = remove_closed_neighborhood(kC5, S(kC5, {}));
  ASSERT_TRUE(same);
  EXPECT_EQ(same->graph, kC5);

  EXPECT_FALSE(remove_closed_neighborhood(kP3, S(kP3, {1})));
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(kC4, S(kC4, {0, 1, 2})).graph, kP3);
  const Graph k4 = make_named(GraphKind::complete, 4);
  EXPECT_EQ(induced_subgraph(k4, S(k4, {1, 3})).graph, make_named(GraphKind::complete, 2));
  const InducedSubgraph s = induced_subgraph(kC5, S(kC5, {0, 2, 4}));
  EXPECT_EQ(s.graph, Graph(3, {{0, 2}}));
  EXPECT_THROW(induced_subgraph(kC5, S(kC5, {})), ConstructionError);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(kC5).size(), 1u);
  const Graph k2 = make_named(GraphKind::complete, 2);
  const auto parts = connected_components(direct_product(k2, k2));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 2u);
  EXPECT_EQ(parts[1].size(), 2u);
  EXPECT_LT(parts[0].first(), parts[1].first());
  const Graph k1 = make_named(GraphKind::complete, 1);
  EXPECT_EQ(connected_components(k1).size(), 1u);
  EXPECT_TRUE(is_connected(k1));
}

TEST(DegreeBounds, Examples) {
  EXPECT_EQ(degree_bounds(kC5).min_degree, 2u);
  EXPECT_EQ(degree_bounds(kC5).max_degree, 2u);
  EXPECT_EQ(degree_bounds(kK13).min_degree, 1u);
  EXPECT_EQ(degree_bounds(kK13).max_degree, 3u);
  EXPECT_EQ(degree_bounds(make_named(GraphKind::complete, 1)).max_degree, 0u);
}

TEST(GraphCoreProperties, RandomGraphs) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 9, 0.4, rng);
    const std::size_t n = g.order();
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    const VertexSet a = VertexSet::from_mask(n, pick(rng));
    a.for_each([&](Vertex u) {
      const VertexSet pn = private_neighborhood(g, u, a);
      EXPECT_TRUE(pn.is_subset_of(g.closed_neighbors(u)));
      VertexSet without_u = pn;
      if (without_u.contains(u)) without_u.erase(u);
      EXPECT_EQ(external_private_neighborhood(g, u, a), without_u);
      EXPECT_FALSE(without_u.intersects(a));
    });
    if (is_open_irredundant(g, a)) EXPECT_TRUE(is_irredundant(g, a));

    // Components partition any remnant.
    if (auto r = remove_closed_neighborhood(g, a)) {
      VertexSet seen(r->graph.order());
      for (const auto& c : connected_components(r->graph)) {
        EXPECT_FALSE(c.intersects(seen));
        seen |= c;
      }
      EXPECT_EQ(seen, r->graph.vertices());
      EXPECT_EQ(r->graph.order() + neighborhood(g, a, true).size(), n);
    }
  }
}

TEST(Isomorphism, Examples) {
  const Graph k2 = make_named(GraphKind::complete, 2);
  EXPECT_TRUE(are_isomorphic(cartesian_product(k2, k2), kC4));
  EXPECT_FALSE(are_isomorphic(kP4, kC4));
  const Graph lhs = direct_product(corona(kP3), k2);
  const Graph rhs = corona(direct_product(kP3, k2));
  EXPECT_TRUE(are_isomorphic(lhs, rhs));
}

TEST(Isomorphism, CapIsEnforcedAndConfigurable) {
  const Graph c17 = make_named(GraphKind::cycle, 17);
  EXPECT_THROW(are_isomorphic(c17, c17), InstanceTooLargeError);
  EXPECT_TRUE(are_isomorphic(c17, c17, IsomorphismOptions{17}));
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_TRUE(are_isomorphic(h, g));
    const Graph other = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(are_isomorphic(g, other), oracle::isomorphic(g, other)) << trial;
  }
}

TEST(Isomorphism, RegularGraphsNeedBacktracking) {
  // C6 versus two triangles: same degree sequence, refinement alone is stuck.
  const Graph c6 = make_named(GraphKind::cycle, 6);
  const Graph two_k3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(are_isomorphic(c6, two_k3));
  // K3,3 versus the prism.
  const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(are_isomorphic(k33, prism));
  EXPECT_TRUE(are_isomorphic(k33, oracle::relabel(k33, {5, 1, 3, 0, 2, 4})));
}

}  // namespace
}  // namespace domsuite
