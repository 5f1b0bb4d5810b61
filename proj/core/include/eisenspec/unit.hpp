#pragma once

#include <compare>
#include <cstdint>

namespace eisenspec {

/// An element omega^k of the sixth roots of unity, omega = (1 + i*sqrt(3)) / 2.
class Unit {
public:
    constexpr Unit() noexcept = default;
    constexpr explicit Unit(int exponent) noexcept
        : k_(static_cast<std::uint8_t>(((exponent % 6) + 6) % 6)) {}

    static constexpr Unit one() noexcept { return Unit(0); }
    static constexpr Unit omega() noexcept { return Unit(1); }
    static constexpr Unit minus_one() noexcept { return Unit(3); }

    [[nodiscard]] constexpr int exponent() const noexcept { return k_; }
    [[nodiscard]] constexpr Unit conj() const noexcept { return Unit(6 - k_); }
    [[nodiscard]] constexpr Unit inverse() const noexcept { return conj(); }
    [[nodiscard]] constexpr bool is_real() const noexcept { return k_ == 0 || k_ == 3; }

    /// 2 * Re(omega^k), one of {2, 1, -1, -2}.
    [[nodiscard]] constexpr int twice_real_part() const noexcept {
        constexpr int table[6] = {2, 1, -1, -2, -1, 1};
        return table[k_];
    }

    constexpr Unit& operator*=(Unit other) noexcept {
        k_ = static_cast<std::uint8_t>((k_ + other.k_) % 6);
        return *this;
    }
    friend constexpr Unit operator*(Unit a, Unit b) noexcept { return a *= b; }

    friend constexpr bool operator==(Unit, Unit) noexcept = default;
    friend constexpr auto operator<=>(Unit, Unit) noexcept = default;

private:
    std::uint8_t k_ = 0;
};

constexpr Unit unit_mul(Unit a, Unit b) noexcept { return a * b; }
constexpr Unit unit_conj(Unit u) noexcept { return u.conj(); }

}  // namespace eisenspec
