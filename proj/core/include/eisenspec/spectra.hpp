#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "eisenspec/eisenstein.hpp"
#include "eisenspec/polynomial.hpp"
#include "eisenspec/signed_digraph.hpp"

namespace eisenspec {

/// Dense square matrix over Q(omega).
class EisensteinMatrix {
public:
    EisensteinMatrix() = default;
    explicit EisensteinMatrix(int n);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] const EisensteinRational& at(int i, int j) const { return entries_[idx(i, j)]; }
    EisensteinRational& at(int i, int j) { return entries_[idx(i, j)]; }
    [[nodiscard]] bool is_hermitian() const;

    friend EisensteinMatrix operator*(const EisensteinMatrix& a, const EisensteinMatrix& b);
    friend bool operator==(const EisensteinMatrix&, const EisensteinMatrix&) = default;

private:
    [[nodiscard]] std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<EisensteinRational> entries_;
};

using Inertia = RealRootCounts;

struct Spectrum {
    IntPolynomial charpoly;
    Inertia inertia;
    /// Descending.
    std::vector<double> numeric_eigenvalues;
};

struct TriangleCensus {
    long s_one = 0;
    long s_half = 0;
    long s_neg_half = 0;
    long s_neg_one = 0;

    [[nodiscard]] long total() const { return s_one + s_half + s_neg_half + s_neg_one; }
    /// 6 s_1 + 3 s_1/2 - 3 s_-1/2 - 6 s_-1.
    [[nodiscard]] long weighted_trace() const { return 6 * s_one + 3 * s_half - 3 * s_neg_half - 6 * s_neg_one; }
    friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

EisensteinMatrix eisenstein_matrix(const SignedDigraph& phi);

/// Trace recursion over Q(omega); throws std::invalid_argument on non-Hermitian input and
/// std::logic_error if a coefficient fails to be a rational integer.
IntPolynomial char_poly_exact(const EisensteinMatrix& m);
/// Same recursion on unit matrices in machine integers up to order 14; larger orders take the
/// multimodular determinant route (see char_poly_multimodular).
IntPolynomial char_poly_exact(const SignedDigraph& phi);
/// Trace recursion only, any order (used to cross-check the large-order route).
IntPolynomial char_poly_trace_recursion(const SignedDigraph& phi);
/// Hessenberg reduction modulo primes p = 1 (mod 3) with omega mapped to a primitive sixth
/// root of unity, recombined by CRT under a Hadamard bound on the coefficients.
IntPolynomial char_poly_multimodular(const SignedDigraph& phi);

/// tr(M^p) for p in {2, 3}; throws if the result is not a rational integer.
mpz_class trace_power(const EisensteinMatrix& m, int p);
long trace_power(const SignedDigraph& phi, int p);

TriangleCensus triangle_census(const SignedDigraph& phi);

int rank_exact(const SignedDigraph& phi);
Inertia inertia(const SignedDigraph& phi);
Inertia inertia_of(const IntPolynomial& charpoly);

std::vector<double> eigenvalues_numeric(const EisensteinMatrix& m);
std::vector<double> eigenvalues_numeric(const SignedDigraph& phi);
Spectrum spectrum(const SignedDigraph& phi);

/// Product of the ordered-pair gains along the cycle (last -> first included).
/// Throws std::invalid_argument when consecutive vertices are not adjacent.
Unit cycle_gain(const SignedDigraph& phi, const VertexCycle& cycle);

bool spectrum_is_symmetric(const SignedDigraph& phi);

/// Cauchy interlacing for the principal submatrix on `subset`, checked numerically (1e-8).
bool verify_interlacing(const SignedDigraph& phi, std::span<const int> subset);

}  // namespace eisenspec
