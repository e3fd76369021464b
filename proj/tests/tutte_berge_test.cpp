#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "mop/graph6.hpp"
#include "mop/matching.hpp"
#include "mop/triangulation.hpp"
#include "mop/tutte_berge.hpp"
#include "oracles.hpp"

using namespace mop;

TEST(TutteBerge, Examples) {
    const auto k3 = tutte_berge_certificate(named::complete(3));
    EXPECT_EQ(k3.barrier, 0U);
    EXPECT_EQ(k3.odd_components, 1);
    EXPECT_EQ(k3.value, 1);

    const auto star = tutte_berge_certificate(named::star(4));
    EXPECT_EQ(star.barrier, vertex_bit(0));
    EXPECT_EQ(star.odd_components, 3);
    EXPECT_EQ(star.value, 1);
}

TEST(TutteBerge, ValueFormula) {
    int odd = 0;
    EXPECT_EQ(tutte_berge_value(named::star(4), vertex_bit(0), &odd), 1);
    EXPECT_EQ(odd, 3);
    EXPECT_EQ(tutte_berge_value(named::path(4), 0, &odd), 2);
    EXPECT_EQ(odd, 0);
}

TEST(TutteBerge, MopsCertifyHalfOrder) {
    for (int n = 3; n <= 10; ++n) {
        for (const Graph& g : enumerate_mops(n)) {
            const auto cert = tutte_berge_certificate(g);
            EXPECT_EQ(cert.value, n / 2);
            EXPECT_TRUE(check_tutte_berge_certificate(g, cert)) << graph6_encode(g);
            if (n % 2 == 0) EXPECT_EQ(tutte_berge_value(g, 0), n / 2);
        }
    }
}

TEST(TutteBerge, AgreesWithMinimumOverAllBarriers) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_connected(rng, 2 + trial % 8, 0.2 + 0.1 * (trial % 4));
        const auto cert = tutte_berge_certificate(g);
        EXPECT_EQ(cert.value, oracle::tutte_berge_minimum(g)) << graph6_encode(g);
        EXPECT_EQ(cert.value, oracle::matching_number(g));
        EXPECT_TRUE(check_tutte_berge_certificate(g, cert));
    }
}

TEST(TutteBerge, CheckerRejectsWrongBarrier) {
    const Graph star = named::star(4);
    TutteBergeCertificate bad{vertex_bit(1), 1, 2};
    EXPECT_FALSE(check_tutte_berge_certificate(star, bad));
    TutteBergeCertificate lying{vertex_bit(0), 3, 2};
    EXPECT_FALSE(check_tutte_berge_certificate(star, lying));
}

TEST(TutteBerge, SizeGuard) {
    EXPECT_THROW(tutte_berge_certificate(named::cycle(kMaxTutteBergeOrder + 1)), Error);
}

TEST(TutteBerge, Json) {
    const auto j = nlohmann::json::parse(tutte_berge_to_json(tutte_berge_certificate(named::star(4))));
    EXPECT_EQ(j["T"], nlohmann::json::array({0}));
    EXPECT_EQ(j["odd_components"], 3);
    EXPECT_EQ(j["value"], 1);
}
