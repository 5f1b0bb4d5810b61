#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "eisenspec/isomorphism.hpp"
#include "eisenspec/named.hpp"
#include "random_digraphs.hpp"

using namespace eisenspec;

TEST(Isomorphism, AutomorphismGroupSizes) {
    EXPECT_EQ(graph_isomorphisms(named::cycle(5).underlying(), named::cycle(5).underlying()).size(), 10u);
    EXPECT_EQ(graph_isomorphisms(named::complete(4).underlying(), named::complete(4).underlying()).size(), 24u);
    EXPECT_EQ(graph_isomorphisms(named::path(4).underlying(), named::path(4).underlying()).size(), 2u);
    EXPECT_TRUE(graph_isomorphisms(named::path(4).underlying(), named::cycle(4).underlying()).empty());
}

TEST(Isomorphism, ColoursRestrictMappings) {
    const UnderlyingGraph c4 = named::cycle(4).underlying();
    const std::vector<int> colors{1, 0, 0, 0};
    int count = 0;
    for_each_isomorphism(c4, c4, [&](std::span<const int>) { return ++count, true; }, colors, colors);
    EXPECT_EQ(count, 2);
}

TEST(Isomorphism, CanonicalGraphIsInvariant) {
    oracle::Rng rng(89);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 12;
        const UnderlyingGraph g = oracle::random_digraph(rng, n, 0.45).underlying();
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        const UnderlyingGraph h = relabel(g, p);
        EXPECT_EQ(canonical_graph(g), canonical_graph(h));
        EXPECT_EQ(canonical_graph(g), relabel(g, canonical_labeling(g)));
    }
}

TEST(Isomorphism, RefinementIsLabelIndependent) {
    const UnderlyingGraph g = named::kite(4, 2).underlying();
    const std::vector<int> p{5, 4, 3, 2, 1, 0};
    const auto a = refine_colors(g);
    const auto b = refine_colors(relabel(g, p));
    for (int v = 0; v < 6; ++v) EXPECT_EQ(a[static_cast<std::size_t>(v)], b[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])]);
}
