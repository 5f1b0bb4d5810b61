#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "eisenspec/unit.hpp"

namespace eisenspec {

/// Exact element a + b*omega of Q(omega). Coordinates are kept in lowest terms.
class EisensteinRational {
public:
    EisensteinRational() = default;
    EisensteinRational(mpq_class a, mpq_class b);
    EisensteinRational(long a, long b = 0) : EisensteinRational(mpq_class(a), mpq_class(b)) {}

    [[nodiscard]] const mpq_class& a() const noexcept { return a_; }
    [[nodiscard]] const mpq_class& b() const noexcept { return b_; }

    [[nodiscard]] bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    [[nodiscard]] bool is_rational() const { return sgn(b_) == 0; }

    [[nodiscard]] EisensteinRational conj() const;
    [[nodiscard]] mpq_class real_part() const;
    [[nodiscard]] mpq_class norm() const;
    /// Throws std::domain_error on zero.
    [[nodiscard]] EisensteinRational inverse() const;

    EisensteinRational& operator+=(const EisensteinRational& o);
    EisensteinRational& operator-=(const EisensteinRational& o);
    EisensteinRational& operator*=(const EisensteinRational& o);
    EisensteinRational& operator/=(const EisensteinRational& o);

    friend EisensteinRational operator+(EisensteinRational x, const EisensteinRational& y) { return x += y; }
    friend EisensteinRational operator-(EisensteinRational x, const EisensteinRational& y) { return x -= y; }
    friend EisensteinRational operator*(EisensteinRational x, const EisensteinRational& y) { return x *= y; }
    friend EisensteinRational operator/(EisensteinRational x, const EisensteinRational& y) { return x /= y; }
    friend EisensteinRational operator-(const EisensteinRational& x) { return {-x.a_, -x.b_}; }

    friend bool operator==(const EisensteinRational& x, const EisensteinRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    void canonicalize();

    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EisensteinRational& x);

EisensteinRational unit_to_eis(Unit u);
mpq_class eis_real_part(const EisensteinRational& x);

}  // namespace eisenspec
