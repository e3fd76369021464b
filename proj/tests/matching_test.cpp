#include <gtest/gtest.h>

#include <random>

#include "mop/graph6.hpp"
#include "mop/matching.hpp"
#include "mop/triangulation.hpp"
#include "oracles.hpp"

using namespace mop;

TEST(MatchingNumber, Examples) {
    EXPECT_EQ(matching_number(named::complete(3)), 1);
    const Graph three_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    EXPECT_EQ(matching_number(three_edges), 3);
    EXPECT_EQ(matching_number(named::empty(4)), 0);
    EXPECT_EQ(matching_number(named::star(6)), 1);
}

TEST(MatchingNumber, EveryMopHasHalfItsOrder) {
    for (int n = 3; n <= 10; ++n) {
        for (const Graph& g : enumerate_mops(n)) EXPECT_EQ(matching_number(g), n / 2) << graph6_encode(g);
    }
}

TEST(MatchingNumber, AgreesWithOracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_connected(rng, 2 + trial % 10, 0.3);
        EXPECT_EQ(matching_number(g), oracle::matching_number(g)) << graph6_encode(g);
        const Matching m = maximum_matching(g);
        EXPECT_TRUE(is_matching(g, m.edges));
        EXPECT_EQ(m.size(), matching_number(g));
    }
}

TEST(MatchingNumber, RespectsVertexMask) {
    const Graph p4 = named::path(4);
    EXPECT_EQ(matching_number(p4, 0b0111), 1);
    EXPECT_EQ(matching_number(p4, 0b1001), 0);
    EXPECT_TRUE(has_perfect_matching(p4, p4.vertices()));
    EXPECT_FALSE(has_perfect_matching(p4, 0b0111));
}

TEST(IsMatching, DetectsSharedEndpoints) {
    const Graph p4 = named::path(4);
    EXPECT_TRUE(is_matching(p4, edge_bit(0) | edge_bit(2)));
    EXPECT_FALSE(is_matching(p4, edge_bit(0) | edge_bit(1)));
    EXPECT_TRUE(is_matching(p4, 0));
}

TEST(FactorCritical, Examples) {
    EXPECT_TRUE(is_factor_critical(named::complete(3)));
    EXPECT_TRUE(is_factor_critical(named::cycle(5)));
    EXPECT_FALSE(is_factor_critical(named::path(3)));
    EXPECT_TRUE(is_factor_critical(named::empty(1)));
    EXPECT_FALSE(is_factor_critical(named::cycle(4)));
}

TEST(KMatchings, Examples) {
    EXPECT_EQ(k_matchings(named::cycle(6), 3).size(), 2U);
    EXPECT_EQ(k_matchings(named::complete(4), 2).size(), 3U);
    const auto p4 = k_matchings(named::path(4), 2);
    ASSERT_EQ(p4.size(), 1U);
    EXPECT_EQ(p4[0].edges, edge_bit(0) | edge_bit(2));
    EXPECT_TRUE(k_matchings(named::complete(3), 2).empty());
}

TEST(KMatchings, LexicographicAndStoppable) {
    std::vector<EdgeSet> seen;
    for_each_k_matching(named::complete(5), 2, [&](EdgeSet m) {
        seen.push_back(m);
        return seen.size() < 4;
    });
    ASSERT_EQ(seen.size(), 4U);
    const auto all = k_matchings(named::complete(5), 2);
    ASSERT_EQ(all.size(), 15U);
    for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], all[i].edges);
}

TEST(KMatchings, CountAgreesWithOracle) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_connected(rng, 4 + trial % 5, 0.4);
        for (int k = 1; k <= 3; ++k) {
            std::size_t expected = 0;
            std::function<void(int, int, std::uint32_t)> count = [&](int from, int left, std::uint32_t used) {
                if (left == 0) {
                    ++expected;
                    return;
                }
                for (int i = from; i < g.size(); ++i) {
                    const std::uint32_t ends = g.edge_ends(i);
                    if (!(used & ends)) count(i + 1, left - 1, used | ends);
                }
            };
            count(0, k, 0);
            EXPECT_EQ(k_matchings(g, k).size(), expected);
        }
    }
}
