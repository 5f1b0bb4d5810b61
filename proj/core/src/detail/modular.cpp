#include "detail/modular.hpp"

#include <utility>
#include <vector>

namespace eisenspec::detail {

__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Primitive sixth root of unity mod p (a root of x^2 - x + 1).
u64 sixth_root(u64 p) {
    for (u64 g = 2;; ++g) {
        const u64 r = powmod(g, (p - 1) / 6, p);
        if ((mulmod(r, r, p) + 1 + p - r) % p == 0) return r;
    }
}

int rank_mod_p(int n, const std::int8_t* cells, u64 p, u64 omega_image) {
    u64 unit_image[6];
    unit_image[0] = 1;
    for (int k = 1; k < 6; ++k) unit_image[k] = mulmod(unit_image[k - 1], omega_image, p);
    std::vector<u64> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n * n; ++i)
        if (cells[i] >= 0) m[static_cast<std::size_t>(i)] = unit_image[cells[i]];
    auto at = [&](int r, int c) -> u64& { return m[static_cast<std::size_t>(r * n + c)]; };

    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(rank, c));
        const u64 inv = powmod(at(rank, col), p - 2, p);
        for (int r = rank + 1; r < n; ++r) {
            if (at(r, col) == 0) continue;
            const u64 factor = mulmod(at(r, col), inv, p);
            for (int c = col; c < n; ++c) at(r, c) = (at(r, c) + p - mulmod(factor, at(rank, c), p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace eisenspec::detail
