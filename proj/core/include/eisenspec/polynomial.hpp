#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace eisenspec {

/// Integer polynomial, coefficients stored highest degree first.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    /// The monic product of (x - r) over the given integer roots.
    static IntPolynomial from_roots(const std::vector<long>& roots);
    /// Product of (den * x - num) over rational roots num/den.
    static IntPolynomial from_rational_roots(const std::vector<mpq_class>& roots);
    static IntPolynomial monomial(int degree);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^power.
    [[nodiscard]] mpz_class coefficient_of(int power) const;

    [[nodiscard]] mpq_class evaluate(const mpq_class& x) const;
    [[nodiscard]] double evaluate(double x) const;

    /// Multiplicity of the integer root r (0 for the zero polynomial).
    [[nodiscard]] int root_multiplicity(long r) const;
    /// Exact quotient by (x - r)^times; throws std::domain_error if not divisible.
    [[nodiscard]] IntPolynomial divide_root(long r, int times) const;
    /// p(-x), so that the spectrum is negated (up to the sign of the leading coefficient).
    [[nodiscard]] IntPolynomial reflected() const;
    /// True iff every coefficient of x^(deg-odd) vanishes, i.e. p(-x) = +-p(x).
    [[nodiscard]] bool has_parity_symmetry() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Coefficients as decimal strings, highest degree first.
    [[nodiscard]] std::vector<std::string> coefficient_strings() const;
    [[nodiscard]] std::string to_string() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

struct RealRootCounts {
    int positive = 0;
    int zero = 0;
    int negative = 0;

    friend bool operator==(const RealRootCounts&, const RealRootCounts&) = default;
};

std::ostream& operator<<(std::ostream& os, const RealRootCounts& c);

/// Root-sign census by Descartes' rule. Exact when every root is real.
/// Throws std::invalid_argument on the zero polynomial.
RealRootCounts poly_real_root_counts(const IntPolynomial& p);

/// Same census from Sturm sequences of the square-free factors, counted with multiplicity.
/// Non-real roots are simply not counted, so the sum falls short of the degree.
RealRootCounts poly_real_root_counts_sturm(const IntPolynomial& p);

}  // namespace eisenspec
