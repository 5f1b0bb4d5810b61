#pragma once

#include <cstdint>

namespace eisenspec::detail {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);
/// Primitive sixth root of unity mod p (a root of x^2 - x + 1); requires p = 1 (mod 6).
u64 sixth_root(u64 p);

/// Rank over F_p of a unit Hermitian matrix given as row-major gain codes
/// (-1 = no edge), with omega mapped to `omega_image`. A lower bound on the rank over Q(omega).
int rank_mod_p(int n, const std::int8_t* cells, u64 p, u64 omega_image);

}  // namespace eisenspec::detail
