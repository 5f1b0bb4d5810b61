#include <gtest/gtest.h>

#include "eisenspec/expansions.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/spectra.hpp"

using namespace eisenspec;

TEST(Expansions, TwinExpansionShape) {
    const SignedDigraph phi = twin_expand(named::complete_star(3), {2, 1, 3});
    EXPECT_EQ(phi.order(), 6);
    EXPECT_EQ(phi.size(), 2u * 1 + 2 * 3 + 1 * 3);
    EXPECT_FALSE(phi.adjacent(0, 1));
    EXPECT_EQ(phi.gain(1, 2), Unit::omega());
    EXPECT_EQ(rank_exact(phi), 3);
}

TEST(Expansions, CliqueExpansionShape) {
    const SignedDigraph phi = clique_expand(named::path(3), {3, 1, 2});
    EXPECT_EQ(phi.order(), 6);
    EXPECT_EQ(phi.size(), 3u + 3 + 2 + 1);
    EXPECT_EQ(phi.gain(0, 1), Unit::one());
    EXPECT_THROW(clique_expand(named::path(3), {1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(twin_expand(named::path(3), {1, 1}), std::invalid_argument);
}

TEST(Expansions, TwinsAndPseudotwins) {
    const SignedDigraph te = twin_expand(named::complete_star(3), {2, 2, 1});
    EXPECT_TRUE(are_twins(te, 0, 1));
    EXPECT_FALSE(are_twins(te, 1, 2));
    EXPECT_EQ(twin_classes(te), (std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}}));

    const SignedDigraph ce = clique_expand(named::cycle(5), {1, 3, 1, 1, 2});
    EXPECT_TRUE(are_pseudotwins(ce, 1, 2));
    EXPECT_EQ(pseudotwin_classes(ce).size(), 5u);
    EXPECT_EQ(find_pseudotwins(ce).size(), 3u + 1);
}

TEST(Expansions, ReductionInvertsExpansion) {
    const SignedDigraph base = named::t4(false);
    const Reduction r = reduce_twins(twin_expand(base, {3, 1, 2, 4}));
    EXPECT_EQ(r.reduced, base);
    EXPECT_EQ(r.blocks[3], (std::vector<int>{6, 7, 8, 9}));
    EXPECT_EQ(clique_reduce(clique_expand(named::cycle(5), {2, 2, 1, 3, 1})), named::cycle(5));
    EXPECT_EQ(twin_reduce(named::complete_bipartite(3, 5)), named::path(2));
}

TEST(Expansions, TwinClassUpToUnitFactor) {
    // vertices 0 and 1 see vertex 2 through gains 1 and omega
    const SignedDigraph phi = SignedDigraph::from_edge_list(3, {{0, 2, 0}, {1, 2, 1}});
    EXPECT_TRUE(are_twins(phi, 0, 1));
}

TEST(Expansions, ParseVector) {
    EXPECT_EQ(parse_expansion_vector("3,5,16"), (ExpansionVector{3, 5, 16}));
    EXPECT_THROW(parse_expansion_vector("3,,1"), std::invalid_argument);
    EXPECT_THROW(parse_expansion_vector("0,1"), std::invalid_argument);
}
