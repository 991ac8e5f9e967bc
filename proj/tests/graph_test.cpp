#include <gtest/gtest.h>

#include "dmagic/generators.hpp"
#include "dmagic/graph.hpp"
#include "oracles.hpp"

using namespace dmagic;

TEST(BuildGraph, SingleVertex)
{
    Graph g(1, {});
    EXPECT_EQ(g.order(), 1u);
    EXPECT_EQ(g.diameter(), 0);
    EXPECT_TRUE(g.connected());
}

TEST(BuildGraph, FourCycle)
{
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_EQ(g.diameter(), 2);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(g, cycle(4));
}

TEST(BuildGraph, EdgePlusIsolatedVertex)
{
    Graph g(3, {{0, 1}});
    ASSERT_EQ(g.components().size(), 2u);
    EXPECT_EQ(g.component_diameters(), (std::vector<int>{1, 0}));
    EXPECT_EQ(g.diameter(), 1);
    EXPECT_EQ(g.distance(0, 2), kUnreachable);
}

TEST(BuildGraph, RejectsBadEdges)
{
    auto offending = [](std::size_t n, std::vector<Edge> edges) {
        try {
            Graph g(n, edges);
        } catch (const GraphError& e) {
            return e.offending();
        }
        ADD_FAILURE() << "no GraphError";
        return Edge{};
    };
    EXPECT_EQ(offending(3, {{0, 3}}), (Edge{0, 3}));
    EXPECT_EQ(offending(3, {{1, 1}}), (Edge{1, 1}));
    EXPECT_EQ(offending(3, {{0, 1}, {1, 0}}), (Edge{1, 0}));
    EXPECT_THROW(Graph(0, {}), std::invalid_argument);
}

TEST(DNeighborhood, Examples)
{
    EXPECT_EQ(d_neighborhood(cycle(5), 0, {0, 2}), (std::vector<Vertex>{0, 2, 3}));
    EXPECT_EQ(d_neighborhood(cycle(8), 0, {2}), (std::vector<Vertex>{2, 6}));
    auto g = path(5);
    for (Vertex x = 0; x < 5; ++x) EXPECT_EQ(d_neighborhood(g, x, {0}), std::vector<Vertex>{x});
    EXPECT_THROW(d_neighborhood(g, 5, {1}), std::out_of_range);
}

TEST(DNeighborhood, NeverCrossesComponents)
{
    Graph g(3, {{0, 1}});
    EXPECT_EQ(d_neighborhood(g, 2, {0, 1, 2, 3}), std::vector<Vertex>{2});
    EXPECT_EQ(d_neighborhood(g, 0, {0, 1}), (std::vector<Vertex>{0, 1}));
}

TEST(ComplementGraph, Examples)
{
    EXPECT_EQ(complement_graph(complete(3)).edge_count(), 0u);
    Graph two_k2(4, {{0, 2}, {1, 3}});
    EXPECT_EQ(complement_graph(cycle(4)), two_k2);
}

TEST(DisjointUnion, Examples)
{
    std::vector<Graph> k2k1{complete(2), complete(1)};
    auto g = disjoint_union(k2k1);
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.edge_count(), 1u);

    std::vector<Graph> c4c4{cycle(4), cycle(4)};
    auto h = disjoint_union(c4c4);
    EXPECT_EQ(h.order(), 8u);
    EXPECT_EQ(h.regularity(), 2);

    std::vector<Graph> c8c8{cycle(8), cycle(8)};
    auto u = disjoint_union(c8c8);
    EXPECT_EQ(u.order(), 16u);
    EXPECT_EQ(u.component_diameters(), (std::vector<int>{4, 4}));

    EXPECT_THROW(disjoint_union(std::span<const Graph>{}), std::invalid_argument);
}

TEST(LexicographicProduct, Examples)
{
    EXPECT_EQ(lexicographic_product(cycle(4), empty_graph(1)), cycle(4));
    auto g = lexicographic_product(cycle(4), empty_graph(2));
    EXPECT_EQ(g.order(), 8u);
    EXPECT_EQ(g.regularity(), 4);
    EXPECT_EQ(lexicographic_product(complete(2), complete(2)), complete(4));
}

TEST(LexicographicProduct, DegreeLaw)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_graph(rng, 1 + trial % 5, 0.5);
        auto h = oracle::random_graph(rng, 1 + trial % 4, 0.4);
        auto p = lexicographic_product(g, h);
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex x = 0; x < h.order(); ++x)
                EXPECT_EQ(p.degree(a * h.order() + x), h.order() * g.degree(a) + h.degree(x));
    }
}

TEST(Generators, Examples)
{
    EXPECT_TRUE(oracle::isomorphic(h_np(2, 2), cycle(4)));
    EXPECT_TRUE(oracle::isomorphic(complete_multipartite({1, 2}), path(3)));
    EXPECT_EQ(cycle(8).diameter(), 4);
    EXPECT_EQ(path(1).order(), 1u);
    EXPECT_THROW(complete_multipartite(std::span<const std::size_t>{}), std::invalid_argument);
    EXPECT_THROW(cycle(2), std::invalid_argument);
}

TEST(GraphProperties, DistancesMatchFloydAndAreSymmetric)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 1 + trial % 9, 0.1 + 0.1 * (trial % 6));
        auto ref = oracle::floyd(g);
        std::vector<bool> realized(g.diameter() + 1, false);
        for (Vertex x = 0; x < g.order(); ++x) {
            EXPECT_EQ(g.distance(x, x), 0);
            for (Vertex y = 0; y < g.order(); ++y) {
                ASSERT_EQ(g.distance(x, y), ref[x][y]);
                EXPECT_EQ(g.distance(x, y), g.distance(y, x));
                EXPECT_EQ(g.distance(x, y) == kUnreachable, g.component_of(x) != g.component_of(y));
                if (g.distance(x, y) >= 0) realized[g.distance(x, y)] = true;
            }
        }
        if (g.connected())
            for (bool r : realized) EXPECT_TRUE(r);
    }
}

TEST(GraphProperties, NeighborhoodOnlyDependsOnEffectiveSet)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 2 + trial % 7, 0.3);
        DistanceSet set{0, 1, 2, 3, 5, 9};
        for (Vertex x = 0; x < g.order(); ++x) {
            auto eff = set.effective(g.eccentricity_bound(x));
            ASSERT_TRUE(eff.has_value());
            EXPECT_EQ(d_neighborhood(g, x, set), d_neighborhood(g, x, *eff));
        }
    }
}

TEST(GraphProperties, ComplementIsAnInvolution)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_graph(rng, 1 + trial % 8, 0.5);
        EXPECT_EQ(complement_graph(complement_graph(g)), g);
    }
}

TEST(DistanceSetTest, ParseAndComplement)
{
    EXPECT_EQ(DistanceSet::parse("0,2"), (DistanceSet{0, 2}));
    EXPECT_EQ(DistanceSet::parse("1-3"), (DistanceSet{1, 2, 3}));
    EXPECT_EQ(DistanceSet::parse("0, 2-3"), (DistanceSet{0, 2, 3}));
    EXPECT_EQ(DistanceSet::parse("2,1,2").to_string(), "1,2");
    EXPECT_THROW(DistanceSet::parse(""), std::invalid_argument);
    EXPECT_THROW(DistanceSet::parse("3-1"), std::invalid_argument);
    EXPECT_THROW(DistanceSet::parse("a"), std::invalid_argument);
    EXPECT_THROW(DistanceSet({-1}), std::invalid_argument);

    EXPECT_EQ(complement_distance_set({1, 2, 3}, 4), (DistanceSet{0, 4}));
    EXPECT_EQ(complement_distance_set({2}, 2), (DistanceSet{0, 1}));
    EXPECT_FALSE(complement_distance_set(DistanceSet::upto(5), 5).has_value());
    EXPECT_EQ(DistanceSet::all_subsets(2).size(), 7u);
}
