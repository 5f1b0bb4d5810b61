#include <gtest/gtest.h>

#include "eisenspec/named.hpp"
#include "eisenspec/spectra.hpp"
#include "oracle.hpp"
#include "random_digraphs.hpp"

using eisenspec::IntPolynomial;

TEST(Oracle, ArithmeticInZOmega) {
    const oracle::ZOmega w = oracle::unit_value(1);
    EXPECT_EQ(w * w, oracle::unit_value(2));
    EXPECT_EQ(w * w * w, oracle::unit_value(3));
    const oracle::ZOmega x{4, 7};
    EXPECT_EQ(oracle::exact_divide(x * w, w), x);
    EXPECT_THROW(oracle::exact_divide({1, 0}, {2, 0}), std::logic_error);
}

TEST(Oracle, DeterminantOfSmallMatrices) {
    // det [[0, w],[w^5, 0]] = -1
    oracle::Matrix m{{{}, oracle::unit_value(1)}, {oracle::unit_value(5), {}}};
    EXPECT_EQ(oracle::determinant(m), (oracle::ZOmega{-1, 0}));
    EXPECT_EQ(oracle::rank(m), 2);
    EXPECT_EQ(oracle::rank(oracle::adjacency(eisenspec::named::complete_bipartite(2, 3))), 2);
}

TEST(Oracle, HandCheckedPolynomials) {
    EXPECT_EQ(oracle::char_poly(eisenspec::named::complete(3)), (IntPolynomial{1, 0, -3, -2}));
    EXPECT_EQ(oracle::char_poly(eisenspec::named::complete_star(3)), (IntPolynomial{1, 0, -3, -1}));
    EXPECT_EQ(oracle::char_poly(eisenspec::named::cycle(4)), (IntPolynomial{1, 0, -4, 0, 0}));
}

TEST(Oracle, AgreesWithLibraryOnRandomDigraphs) {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const auto phi = oracle::random_digraph(rng, 1 + trial % 11);
        EXPECT_EQ(oracle::char_poly(phi), eisenspec::char_poly_exact(phi));
        EXPECT_EQ(oracle::rank(oracle::adjacency(phi)), eisenspec::rank_exact(phi));
    }
}
