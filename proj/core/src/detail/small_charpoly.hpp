#pragma once

#include <cstdint>

namespace eisenspec::detail {

/// Largest order for which powers, traces and coefficients of a unit Hermitian matrix fit
/// the int64/__int128 kernel below.
inline constexpr int kSmallOrder = 14;

/// Characteristic polynomial of a unit Hermitian matrix given as row-major gain codes
/// (-1 = no edge, else the exponent of omega). Writes n+1 coefficients, highest degree first.
/// Requires n <= kSmallOrder. Throws std::logic_error on a non-integral coefficient.
void small_charpoly(int n, const std::int8_t* cells, std::int64_t* out);

struct SmallInertia {
    int positive = 0;
    int zero = 0;
    int negative = 0;
};

/// Inertia by Descartes' rule on the kernel's coefficients (exact: all roots are real).
SmallInertia small_inertia(int n, const std::int8_t* cells);

}  // namespace eisenspec::detail
