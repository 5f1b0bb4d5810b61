#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "eisenspec/named.hpp"
#include "eisenspec/spectra.hpp"
#include "eisenspec/switching.hpp"
#include "random_digraphs.hpp"

using namespace eisenspec;

namespace {

SwitchingFunction random_switch(oracle::Rng& rng, int n) {
    SwitchingFunction x = SwitchingFunction::identity(n);
    for (auto& u : x.x) u = Unit(static_cast<int>(rng() % 6));
    return x;
}

std::vector<int> random_permutation(oracle::Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST(Switching, PreservesSpectrumAndCycleGains) {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedDigraph phi = oracle::random_connected_digraph(rng, 3 + trial % 7);
        const SignedDigraph psi = apply_switch(phi, random_switch(rng, phi.order()));
        EXPECT_EQ(char_poly_exact(psi), char_poly_exact(phi));
        const SpanningForest tree = bfs_forest(phi.underlying());
        EXPECT_EQ(fundamental_cycle_gains(psi, tree), fundamental_cycle_gains(phi, tree));
    }
}

TEST(Switching, TreeNormalization) {
    oracle::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 2 + trial % 8, 0.5);
        const TreeNormalForm nf = normalize_tree(phi);
        EXPECT_EQ(apply_switch(phi, nf.applied), nf.base);
        for (const auto& [u, v] : nf.tree) EXPECT_EQ(nf.base.gain(u, v), Unit::one());
        EXPECT_EQ(nf.tree.size(), static_cast<std::size_t>(phi.order() - component_count(phi.underlying())));
        // any switch of phi normalizes to the same base
        const SignedDigraph psi = apply_switch(phi, random_switch(rng, phi.order()));
        EXPECT_EQ(normalize_tree(psi, nf.tree).base, nf.base);
    }
}

TEST(Switching, RejectsForeignTree) {
    const SignedDigraph p = named::path(4);
    EXPECT_THROW(normalize_tree(p, SpanningForest{{0, 2}, {1, 2}, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(normalize_tree(p, SpanningForest{{0, 1}}), std::invalid_argument);
}

TEST(Switching, LabeledEquivalenceWitness) {
    oracle::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 2 + trial % 8, 0.6);
        const SignedDigraph psi = apply_switch(phi, random_switch(rng, phi.order()));
        const auto x = switching_equivalent_labeled(phi, psi);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(apply_switch(phi, *x), psi);
    }
    EXPECT_FALSE(switching_equivalent_labeled(named::complete(3), named::complete_star(3)).has_value());
}

TEST(Switching, IsomorphismUnderRelabelSwitchAndConverse) {
    oracle::Rng rng(73);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + trial % 9;
        const SignedDigraph phi = oracle::random_digraph(rng, n, 0.5);
        SignedDigraph psi = relabel(phi, random_permutation(rng, n));
        if (trial % 3 == 0) psi = converse(psi);
        psi = apply_switch(psi, random_switch(rng, n));
        const auto w = switching_isomorphic(phi, psi);
        ASSERT_TRUE(w.has_value()) << to_sdg(phi);
        EXPECT_TRUE(verify_switching_isomorphism(phi, psi, *w));
        EXPECT_EQ(apply_isomorphism(phi, *w), psi);
        if (n <= kCanonicalFormLimit) EXPECT_EQ(canonical_form(phi), canonical_form(psi));
    }
}

TEST(Switching, ConverseCanBeDisallowed) {
    // a signed K4 whose mirror image is reached only through the converse
    const SignedDigraph t =
        SignedDigraph::from_edge_list(4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 1}, {2, 3, 3}});
    EXPECT_TRUE(switching_isomorphic(t, converse(t)).has_value());
    EXPECT_FALSE(switching_isomorphic(t, converse(t), false).has_value());
    EXPECT_NE(canonical_form(t, false), canonical_form(converse(t), false));
}

TEST(Switching, CycleGainPairIsNotIsomorphic) {
    const SignedDigraph a = named::exhibit("cycle_gain_pair_a");
    const SignedDigraph b = named::exhibit("cycle_gain_pair_b");
    EXPECT_EQ(char_poly_exact(a), char_poly_exact(b));
    EXPECT_FALSE(switching_isomorphic(a, b).has_value());
    EXPECT_NE(canonical_form(a), canonical_form(b));
}

TEST(Switching, CanonicalFormSeparatesDistinctClasses) {
    oracle::Rng rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 4;
        const SignedDigraph a = oracle::random_digraph(rng, n, 0.7);
        const SignedDigraph b = oracle::random_digraph(rng, n, 0.7);
        EXPECT_EQ(canonical_form(a) == canonical_form(b), switching_isomorphic(a, b).has_value());
    }
    EXPECT_THROW((void)canonical_form(named::path(13)), std::invalid_argument);
}

TEST(Switching, PlainIsomorphism) {
    const SignedDigraph s = named::complete_star(4);
    const std::vector<int> p{3, 2, 1, 0};
    EXPECT_TRUE(isomorphic(s, relabel(s, p)));
    EXPECT_FALSE(isomorphic(s, named::complete(4)));
}

TEST(Switching, PartnerFromCutSwitch) {
    oracle::Rng rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 2 + trial % 7, 0.5);
        if (phi.size() == 0) continue;
        const auto partner = find_nonisomorphic_switch_partner(phi);
        ASSERT_TRUE(partner.has_value());
        EXPECT_FALSE(isomorphic(phi, *partner));
        EXPECT_TRUE(switching_equivalent_labeled(phi, *partner).has_value());
    }
    EXPECT_FALSE(find_nonisomorphic_switch_partner(named::empty(4)).has_value());
}
