#include <gtest/gtest.h>

#include "eisenspec/census.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/sachs.hpp"
#include "eisenspec/spectra.hpp"
#include "random_digraphs.hpp"

using namespace eisenspec;

TEST(Elementary, CountsOnSmallGraphs) {
    const UnderlyingGraph k4 = named::complete(4).underlying();
    EXPECT_EQ(enumerate_elementary(k4, 2).size(), 6u);
    EXPECT_EQ(enumerate_elementary(k4, 3).size(), 4u);
    // three perfect matchings plus three Hamiltonian cycles
    EXPECT_EQ(enumerate_elementary(k4, 4).size(), 6u);
    int total = 0;
    for_each_elementary(k4, [&](const ElementarySubgraph&) { ++total; });
    EXPECT_EQ(total, 1 + 6 + 4 + 6);
}

TEST(Elementary, CycleNormalization) {
    for (const auto& h : enumerate_elementary(named::cycle(5).underlying(), 5)) {
        ASSERT_EQ(h.cycles.size(), 1u);
        const auto& c = h.cycles[0].vertices;
        EXPECT_EQ(c.front(), 0);
        EXPECT_LT(c[1], c.back());
    }
}

TEST(Elementary, CycleStats) {
    const SignedDigraph phi = named::cycle(3, Unit::omega());
    const auto hs = enumerate_elementary(phi.underlying(), 3);
    ASSERT_EQ(hs.size(), 1u);
    const CycleStats s = cycle_stats(phi, hs[0]);
    EXPECT_EQ(s.cycles, 1);
    EXPECT_EQ(s.non_real, 1);
}

TEST(Sachs, AgreesWithExactOnRandomDigraphs) {
    oracle::Rng rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 1 + trial % 9, 0.6);
        EXPECT_EQ(char_poly_sachs(phi), char_poly_exact(phi));
    }
}

TEST(Sachs, RefusesLargeOrdersUnlessForced) {
    const SignedDigraph phi = named::path(13);
    EXPECT_THROW((void)char_poly_sachs(phi), std::invalid_argument);
    EXPECT_EQ(char_poly_sachs(phi, true), char_poly_exact(phi));
}
