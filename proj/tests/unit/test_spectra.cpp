#include <gtest/gtest.h>

#include <map>
#include <string>

#include "eisenspec/expansions.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/spectra.hpp"
#include "oracle.hpp"
#include "random_digraphs.hpp"

using namespace eisenspec;

namespace {

// Frozen from an independent symbolic determinant of x I - E.
const std::map<std::string, IntPolynomial>& goldens() {
    static const std::map<std::string, IntPolynomial> table{
        {"G1", {1, 0, -16, -32, -7, 28, 22, 4}},
        {"G2", {1, 0, -16, -32, -5, 34, 28, 6}},
        {"G3", {1, 0, -11, -16, 3, 16, 7}},
        {"G4", {1, 0, -11, -14, 4, 8, 0}},
        {"G5", {1, 0, -8, -4, 12, 8, 0}},
        {"G6", {1, 0, -12, -14, 20, 42, 23, 4}},
        {"Gem", {1, 0, -7, -6, 3, 2}},
        {"ThreePan", {1, 0, -4, -2, 1}},
        {"T4+", {1, 0, -6, -4, 0}},
        {"C5 type A", {1, 0, -5, 0, 5, 2}},
        {"C5 type B", {1, 0, -8, -2, 12, 8, 1}},
        {"C5 type C", {1, 0, -5, 0, 5, 1}},
        {"SemiCompleteTilde(2,3)", {1, 0, -10, -9, 19, 32, 14, 1}},
        {"symmetric_spectrum_example", {1, 0, -13, 0, 47, 0, -42, 0, 4, 0, 0, 0}},
        {"zero_lambda3_a", {1, 0, -10, -8, 21, 32, 12, 0}},
        {"c4_analogue_pair_a", {1, 0, -29, -100, -129, -34, 85, 96, 40, 6}},
    };
    return table;
}

SignedDigraph golden_digraph(const std::string& name) {
    if (name == "T4+") return named::t4(true);
    if (name == "C5 type A") return named::c5_type(C5Type::A, {1, 1, 1, 1, 1});
    if (name == "C5 type B") return named::c5_type(C5Type::B, {1, 1, 1, 1, 2});
    if (name == "C5 type C") return named::c5_type(C5Type::C, {1, 1, 1, 1, 1});
    if (name == "SemiCompleteTilde(2,3)") return named::semicomplete_tilde(2, 3);
    return named::by_name(name, {});
}

}  // namespace

TEST(CharPoly, FrozenGoldens) {
    for (const auto& [name, expected] : goldens()) {
        const SignedDigraph phi = golden_digraph(name);
        EXPECT_EQ(char_poly_exact(phi), expected) << name;
        EXPECT_EQ(char_poly_exact(eisenstein_matrix(phi)), expected) << name;
    }
}

TEST(CharPoly, RoutesAgreeAcrossOrders) {
    oracle::Rng rng(23);
    for (int n : {3, 9, 14, 15, 20, 33}) {
        const SignedDigraph phi = oracle::random_digraph(rng, n, 0.4);
        const IntPolynomial reference = char_poly_trace_recursion(phi);
        EXPECT_EQ(char_poly_exact(phi), reference) << n;
        EXPECT_EQ(char_poly_multimodular(phi), reference) << n;
        if (n <= 15) EXPECT_EQ(oracle::char_poly(phi), reference) << n;
    }
}

TEST(CharPoly, LargeOrderUsesMultimodularRoute) {
    oracle::Rng rng(29);
    const SignedDigraph phi = oracle::random_digraph(rng, 70, 0.2);
    const IntPolynomial p = char_poly_exact(phi);
    EXPECT_EQ(p, char_poly_trace_recursion(phi));
    EXPECT_EQ(p.coefficient_of(68), -static_cast<long>(phi.size()));
}

TEST(CharPoly, CompleteStarClosedForm) {
    for (int n = 3; n <= 12; ++n) {
        std::vector<mpz_class> expected{1, -(n - 3), -(2 * n - 3), -1};
        for (int i = 0; i < n - 3; ++i) expected = oracle::multiply(expected, {1, 1});
        EXPECT_EQ(char_poly_exact(named::complete_star(n)), IntPolynomial(expected)) << n;
    }
}

TEST(CharPoly, RejectsNonHermitianMatrix) {
    EisensteinMatrix m(2);
    m.at(0, 1) = EisensteinRational(0, 1);
    EXPECT_FALSE(m.is_hermitian());
    EXPECT_THROW((void)char_poly_exact(m), std::invalid_argument);
}

TEST(Inertia, MatchesNumericEigenvalues) {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 1 + trial % 18, 0.5);
        const Inertia in = inertia(phi);
        EXPECT_EQ(in, inertia_of(char_poly_exact(phi)));
        EXPECT_EQ(in, poly_real_root_counts_sturm(char_poly_exact(phi)));
        Inertia numeric;
        for (double ev : eigenvalues_numeric(phi)) (ev > 1e-7 ? numeric.positive : ev < -1e-7 ? numeric.negative : numeric.zero)++;
        EXPECT_EQ(in, numeric);
        EXPECT_EQ(rank_exact(phi), phi.order() - in.zero);
    }
}

TEST(Inertia, KnownValues) {
    EXPECT_EQ(inertia(named::complete_double_star(5)), (Inertia{1, 1, 3}));
    EXPECT_EQ(inertia(named::complete(6)), (Inertia{1, 0, 5}));
    EXPECT_EQ(rank_exact(named::complete_bipartite(3, 4)), 2);
    EXPECT_EQ(rank_exact(named::empty(4)), 0);
}

TEST(Traces, MatchReferenceProducts) {
    oracle::Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 2 + trial % 9);
        EXPECT_EQ(trace_power(phi, 2), 2 * static_cast<long>(phi.size()));
        EXPECT_EQ(mpz_class(trace_power(phi, 3)), oracle::trace_power(phi, 3));
        EXPECT_EQ(triangle_census(phi).weighted_trace(), trace_power(phi, 3));
        EXPECT_EQ(trace_power(eisenstein_matrix(phi), 3), oracle::trace_power(phi, 3));
    }
}

TEST(Traces, TriangleCensusOfNamedGraphs) {
    EXPECT_EQ(triangle_census(named::complete(4)), (TriangleCensus{4, 0, 0, 0}));
    const TriangleCensus star = triangle_census(named::complete_star(4));
    EXPECT_EQ(star.s_one, 2);
    EXPECT_EQ(star.s_half, 2);
}

TEST(CycleGain, Basics) {
    const SignedDigraph c = named::cycle(5, Unit(2));
    EXPECT_EQ(cycle_gain(c, {{0, 1, 2, 3, 4}}), Unit(2));
    EXPECT_EQ(cycle_gain(c, {{4, 3, 2, 1, 0}}), Unit(4));
    EXPECT_THROW((void)cycle_gain(c, {{0, 2, 1}}), std::invalid_argument);
}

TEST(SymmetricSpectrum, BipartiteAndExhibit) {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial)
        EXPECT_TRUE(spectrum_is_symmetric(oracle::random_bipartite_digraph(rng, 1 + trial % 5, 1 + trial % 6)));
    EXPECT_TRUE(spectrum_is_symmetric(named::exhibit("symmetric_spectrum_example")));
    EXPECT_FALSE(spectrum_is_symmetric(named::complete(3)));
}

TEST(Interlacing, HoldsForRandomSubsets) {
    oracle::Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const SignedDigraph phi = oracle::random_digraph(rng, 8);
        std::vector<int> subset;
        for (int v = 0; v < 8; ++v)
            if ((trial >> (v % 6)) & 1) subset.push_back(v);
        EXPECT_TRUE(verify_interlacing(phi, subset));
    }
}

TEST(Spectrum, Bundle) {
    const Spectrum s = spectrum(named::complete(4));
    EXPECT_EQ(s.charpoly, (IntPolynomial{1, 0, -6, -8, -3}));
    EXPECT_EQ(s.inertia, (Inertia{1, 0, 3}));
    ASSERT_EQ(s.numeric_eigenvalues.size(), 4u);
    EXPECT_NEAR(s.numeric_eigenvalues.front(), 3.0, 1e-9);
}
