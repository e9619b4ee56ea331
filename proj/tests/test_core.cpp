#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "wellness/core.hpp"
#include "wellness/io.hpp"
#include "wellness/trials.hpp"

using namespace wellness;
using namespace fixtures;

TEST(Graph, RejectsSelfLoopsDuplicatesAndBadIds) {
    EXPECT_THROW(Graph(2, {{0, 0}}), InvalidInstance);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InvalidInstance);
    EXPECT_THROW(Graph(2, {{0, 2}}), InvalidInstance);
    EXPECT_THROW(Graph(2, {{-1, 1}}), InvalidInstance);
}

TEST(Graph, AdjacencyIsSymmetric) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 1 + trial % 9, 0.4);
        for (int u = 0; u < static_cast<int>(g.order()); ++u) {
            for (int v : g.neighbors(u)) {
                EXPECT_TRUE(g.has_edge(v, u));
                EXPECT_NE(u, v);
            }
        }
    }
}

TEST(Neighborhood, Open) {
    EXPECT_EQ(open_neighborhood(cycle(4), 0), (VertexSet{1, 3}));
    EXPECT_EQ(open_neighborhood(Graph(1), 0), VertexSet{});
    EXPECT_EQ(open_neighborhood(path(3), 1), (VertexSet{0, 2}));
    EXPECT_THROW(open_neighborhood(path(3), 3), InvalidInstance);
}

TEST(Neighborhood, Closed) {
    EXPECT_EQ(closed_neighborhood(path(3), 1), (VertexSet{0, 1, 2}));
    EXPECT_EQ(closed_neighborhood(Graph(1), 0), VertexSet{0});
    EXPECT_EQ(closed_neighborhood(cycle(4), 2), (VertexSet{1, 2, 3}));
    EXPECT_THROW(closed_neighborhood(Graph(1), 1), InvalidInstance);
}

TEST(Structure, Bipartite) {
    auto c4 = is_bipartite(cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->left, (VertexSet{0, 2}));
    EXPECT_EQ(c4->right, (VertexSet{1, 3}));
    EXPECT_FALSE(is_bipartite(complete(3)));
    auto p4 = is_bipartite(path(4));
    ASSERT_TRUE(p4);
    EXPECT_EQ(p4->left, (VertexSet{0, 2}));
    EXPECT_EQ(p4->right, (VertexSet{1, 3}));
    // Disconnected: every component is coloured.
    auto two = is_bipartite(Graph(4, {{0, 1}, {2, 3}}));
    ASSERT_TRUE(two);
    EXPECT_EQ(two->left, (VertexSet{0, 2}));
}

// Exhaustive clique/independent partition, independent of the degree-sequence test.
static bool split_by_partition(const Graph& g) {
    const auto n = g.order();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        VertexSet clique, rest;
        for (std::size_t v = 0; v < n; ++v) ((m >> v & 1) ? clique : rest).push_back(static_cast<int>(v));
        if (is_clique(g, clique) && is_independent(g, rest)) return true;
    }
    return false;
}

TEST(Structure, Split) {
    EXPECT_TRUE(is_split(complete(3)));
    EXPECT_FALSE(is_split(cycle(4)));
    EXPECT_FALSE(split_by_partition(cycle(4)));
    EXPECT_TRUE(is_split(star(3)));
    EXPECT_TRUE(is_split(Graph(3)));
}

TEST(Structure, SplitAgreesWithPartitionSearch) {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(rng, 1 + trial % 8, 0.2 + 0.1 * (trial % 7));
        EXPECT_EQ(is_split(g), split_by_partition(g)) << io::to_string(g);
    }
}

TEST(Structure, Degeneracy) {
    EXPECT_EQ(degeneracy(path(4)), 1u);
    EXPECT_EQ(degeneracy(cycle(4)), 2u);
    EXPECT_EQ(degeneracy(complete(4)), 3u);
    EXPECT_EQ(degeneracy(Graph(3)), 0u);
}

TEST(Structure, DegeneracyBounds) {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 1 + trial % 10, 0.35);
        EXPECT_LE(degeneracy(g), g.max_degree());
    }
    // Forests: random trees joined with extra isolated vertices.
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 9;
        std::vector<Edge> edges;
        for (std::size_t v = 1; v < n; ++v) {
            if (rng.chance(0.8)) edges.emplace_back(static_cast<int>(rng.below(v)), static_cast<int>(v));
        }
        EXPECT_LE(degeneracy(Graph(n, edges)), 1u);
    }
}

TEST(Structure, Connected) {
    EXPECT_TRUE(is_connected(path(3)));
    EXPECT_FALSE(is_connected(Graph(2)));
    EXPECT_TRUE(is_connected(cycle(4)));
    EXPECT_THROW(is_connected(Graph(0)), PreconditionViolated);
}

TEST(Hypergraph, Validation) {
    EXPECT_THROW(hyper({"a", "a"}, {}), InvalidInstance);
    EXPECT_THROW(hyper({"a"}, {{"b"}}), InvalidInstance);
    EXPECT_THROW(hyper({"a"}, {{}}), InvalidInstance);
    auto dup = hyper({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    EXPECT_EQ(dup.validation_warnings().size(), 1u);
    EXPECT_TRUE(path_edges().validation_warnings().empty());
    EXPECT_NO_THROW(hyper({"a"}, {}));
}

TEST(Hypergraph, Dual) {
    auto h = hyper({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto d = h.dual();
    EXPECT_EQ(d.universe_size(), 2u);
    EXPECT_EQ(d.sets(), (std::vector<std::vector<int>>{{0}, {0, 1}, {1}}));
    EXPECT_THROW(hyper({"a", "z"}, {{"a"}}).dual(), UncoverableElement);
}

TEST(Incidence, Shapes) {
    auto star_like = incidence_bipartite_graph(hyper({"a", "b"}, {{"a", "b"}}));
    EXPECT_EQ(star_like.graph.order(), 3u);
    EXPECT_EQ(star_like.graph.degree(2), 2u);
    EXPECT_EQ(star_like.side[2], IncidenceSide::set);

    auto edge = incidence_bipartite_graph(hyper({"a"}, {{"a"}}));
    EXPECT_EQ(edge.graph.order(), 2u);
    EXPECT_EQ(edge.graph.size(), 1u);

    // P5: a - F0 - b - F1 - c, b of degree 2.
    auto p5 = incidence_bipartite_graph(path_edges());
    const auto& g = p5.graph;
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(g.size(), 4u);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.degree(2), 1u);
    EXPECT_EQ(degeneracy(g), 1u);
}

TEST(Incidence, AlwaysBipartite) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto h = random_hypergraph(rng, 1 + trial % 7, trial % 6);
        EXPECT_TRUE(is_bipartite(incidence_bipartite_graph(h).graph));
    }
}
