#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "wellness/chain.hpp"
#include "wellness/trials.hpp"

using namespace wellness;
using namespace fixtures;

TEST(ChainParameters, Examples) {
    EXPECT_EQ(chain_parameters(cycle(4)), (ChainParameters{2, 2, 2, 2}));
    EXPECT_EQ(chain_parameters(path(3)), (ChainParameters{1, 2, 1, 2}));
    EXPECT_EQ(chain_parameters(complete(5)), (ChainParameters{1, 1, 1, 1}));
    EXPECT_EQ(to_record(chain_parameters(path(3))), "1 2 1 2");
}

TEST(ChainParameters, ChainOrder) {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 1 + trial % 10, 0.3);
        auto p = chain_parameters(g);
        EXPECT_GE(p.gamma, 1u);
        EXPECT_LE(p.gamma, p.iota);
        EXPECT_LE(p.iota, p.alpha);
        EXPECT_LE(p.iota, p.Gamma);
        EXPECT_LE(p.alpha, p.Gamma);
    }
}

TEST(ChainParameters, BridgesToCheckers) {
    Rng rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_graph(rng, 1 + trial % 10, 0.15 + 0.1 * (trial % 7));
        auto p = chain_parameters(g);
        EXPECT_EQ(check_well_dominated(g).well, p.gamma == p.Gamma);
        EXPECT_EQ(check_well_covered(g).well, p.iota == p.alpha);
    }
}

TEST(Corona, Examples) {
    auto p4 = is_corona_with_K1(path(4));
    ASSERT_TRUE(p4);
    EXPECT_EQ(p4->order(), 2u);
    EXPECT_EQ(p4->size(), 1u);

    auto k2 = is_corona_with_K1(complete(2));
    ASSERT_TRUE(k2);
    EXPECT_EQ(k2->order(), 1u);

    EXPECT_FALSE(is_corona_with_K1(cycle(4)));
    EXPECT_FALSE(is_corona_with_K1(Graph(1)));
    EXPECT_FALSE(is_corona_with_K1(path(6)));
    EXPECT_FALSE(is_corona_with_K1(Graph(4, {{0, 1}, {2, 3}})));  // base would be disconnected
    EXPECT_FALSE(is_corona_with_K1(star(3)));
}

// H o K1 recognised with base isomorphic to H. Bases come out relabelled
// by increasing id; corona_with_K1 keeps H on ids 0..|H|-1 so they are equal.
TEST(Corona, RoundTrip) {
    Rng rng(6);
    int built = 0;
    for (int trial = 0; trial < 200 && built < 80; ++trial) {
        auto h = random_graph(rng, 1 + trial % 7, 0.5);
        if (!is_connected(h)) continue;
        ++built;
        auto base = is_corona_with_K1(corona_with_K1(h));
        ASSERT_TRUE(base) << io::to_string(h);
        EXPECT_EQ(*base, h);
    }
    EXPECT_GE(built, 40);
}

TEST(BipartiteRecognition, Examples) {
    EXPECT_TRUE(recognize_bipartite_well_dominated(cycle(4)));
    EXPECT_TRUE(recognize_bipartite_well_dominated(path(4)));
    EXPECT_FALSE(recognize_bipartite_well_dominated(path(6)));
    EXPECT_TRUE(recognize_bipartite_well_dominated(Graph(1)));
    EXPECT_TRUE(recognize_bipartite_well_dominated(complete(2)));
    EXPECT_THROW(recognize_bipartite_well_dominated(complete(3)), PreconditionViolated);
    EXPECT_THROW(recognize_bipartite_well_dominated(Graph(2)), PreconditionViolated);
}

// Every connected bipartite graph on 2..7 vertices, via all edge subsets
// of the complete bipartite graphs K_{a,b}.
TEST(BipartiteRecognition, ExhaustiveAgreementUpToSevenVertices) {
    std::size_t checked = 0, positive = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t a = 1; a < n && a <= n / 2; ++a) {
            std::vector<Edge> all;
            for (std::size_t u = 0; u < a; ++u)
                for (std::size_t v = a; v < n; ++v) all.emplace_back(static_cast<int>(u), static_cast<int>(v));
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << all.size()); ++m) {
                std::vector<Edge> edges;
                for (std::size_t i = 0; i < all.size(); ++i)
                    if (m >> i & 1) edges.push_back(all[i]);
                Graph g(n, edges);
                if (!is_connected(g)) continue;
                ++checked;
                bool fast = recognize_bipartite_well_dominated(g);
                positive += fast;
                ASSERT_EQ(fast, check_well_dominated(g).well) << io::to_string(g);
            }
        }
    }
    EXPECT_GT(checked, 1000u);
    EXPECT_GT(positive, 10u);
}

TEST(VeryWell, Covered) {
    EXPECT_TRUE(is_very_well_covered(cycle(4)));
    EXPECT_FALSE(is_very_well_covered(cycle(5)));
    EXPECT_TRUE(is_very_well_covered(path(4)));
    EXPECT_THROW(is_very_well_covered(Graph(2)), IsolatedVertex);
}

TEST(VeryWell, Dominated) {
    EXPECT_TRUE(is_very_well_dominated(cycle(4)));
    EXPECT_FALSE(is_very_well_dominated(complete(3)));
    EXPECT_TRUE(is_very_well_dominated(path(4)));
    EXPECT_THROW(is_very_well_dominated(Graph(3, {{0, 1}})), IsolatedVertex);
}
