#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mop/canonical.hpp"
#include "mop/triangulation.hpp"
#include "oracles.hpp"

using namespace mop;

TEST(Canonical, PermutedCopiesAgree) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 9;
        const Graph g = oracle::random_connected(rng, n, 0.3);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = g.relabeled(perm);
        EXPECT_EQ(canonical_form(g).graph6, canonical_form(h).graph6);
        EXPECT_EQ(canonical_graph(g), canonical_graph(h));
    }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
    EXPECT_NE(canonical_form(named::path(3)).graph6, canonical_form(named::complete(3)).graph6);
    EXPECT_FALSE(isomorphic(named::cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Canonical, AgreesWithPermutationOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 5;
        const Graph a = oracle::random_connected(rng, n, 0.35);
        const Graph b = oracle::random_connected(rng, n, 0.35);
        EXPECT_EQ(isomorphic(a, b), oracle::isomorphic(a, b));
    }
}

TEST(Canonical, LabelIsAPermutation) {
    const auto form = canonical_form(named::star(6));
    std::vector<int> sorted = form.label;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(Canonical, HexagonTriangulationsGiveThreeForms) {
    std::set<std::string> forms;
    int labelled = 0;
    enumerate_triangulations(6, [&](const Triangulation& t) {
        ++labelled;
        forms.insert(canonical_form(t.graph()).graph6);
    });
    EXPECT_EQ(labelled, 14);
    EXPECT_EQ(forms.size(), 3U);
}

TEST(Automorphisms, CountsForSymmetricGraphs) {
    EXPECT_EQ(automorphisms(named::cycle(6)).size(), 12U);
    EXPECT_EQ(automorphisms(named::complete(4)).size(), 24U);
    EXPECT_EQ(automorphisms(named::path(4)).size(), 2U);
    EXPECT_EQ(automorphisms(named::complete(5), 10).size(), 10U);
}

TEST(Automorphisms, EveryMapPreservesAdjacency) {
    const Graph g = enumerate_mops(8).front();
    for (const auto& sigma : automorphisms(g)) {
        for (const auto& e : g.edges()) EXPECT_TRUE(g.adjacent(sigma[e.u], sigma[e.v]));
    }
}
