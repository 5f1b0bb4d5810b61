#include "detail/small_charpoly.hpp"

#include <stdexcept>

namespace eisenspec::detail {

namespace {

struct Z {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

// (a + b w) * w^k
inline Z rotate(Z z, int k) {
    switch (k) {
        case 0: return z;
        case 1: return {-z.b, z.a + z.b};
        case 2: return {-z.a - z.b, z.a};
        case 3: return {-z.a, -z.b};
        case 4: return {z.b, -z.a - z.b};
        default: return {z.a + z.b, -z.a};
    }
}

constexpr int N = kSmallOrder;

__extension__ typedef __int128 i128;

}  // namespace

void small_charpoly(int n, const std::int8_t* cells, std::int64_t* out) {
    if (n > N) throw std::logic_error("small_charpoly: order too large");
    out[0] = 1;
    if (n == 0) return;

    int nbr[N][N];
    int nbr_gain[N][N];
    int deg[N] = {};
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            const int c = cells[k * n + l];
            if (c >= 0) {
                nbr[k][deg[k]] = l;
                nbr_gain[k][deg[k]] = c;
                ++deg[k];
            }
        }
    }

    const int half = (n + 1) / 2;
    // powers[t] holds E^(t+1)
    static thread_local Z powers[(N + 1) / 2][N][N];
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) powers[0][i][l] = Z{};
        for (int d = 0; d < deg[i]; ++d) powers[0][i][nbr[i][d]] = rotate(Z{1, 0}, nbr_gain[i][d]);
    }
    for (int t = 1; t < half; ++t) {
        for (int i = 0; i < n; ++i) {
            Z* row = powers[t][i];
            for (int l = 0; l < n; ++l) row[l] = Z{};
            const Z* prev = powers[t - 1][i];
            for (int k = 0; k < n; ++k) {
                const Z p = prev[k];
                if (p.a == 0 && p.b == 0) continue;
                for (int d = 0; d < deg[k]; ++d) {
                    const Z r = rotate(p, nbr_gain[k][d]);
                    row[nbr[k][d]].a += r.a;
                    row[nbr[k][d]].b += r.b;
                }
            }
        }
    }

    i128 traces[N + 1] = {};
    for (int j = 1; j <= half; ++j) {
        std::int64_t a = 0;
        std::int64_t b = 0;
        for (int i = 0; i < n; ++i) {
            a += powers[j - 1][i][i].a;
            b += powers[j - 1][i][i].b;
        }
        if (b != 0) throw std::logic_error("small_charpoly: non-real trace");
        traces[j] = a;
    }
    for (int j = half + 1; j <= n; ++j) {
        // tr(E^half * E^(j-half))
        const auto& left = powers[half - 1];
        const auto& right = powers[j - half - 1];
        i128 a = 0;
        i128 b = 0;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const Z x = left[i][k];
                const Z y = right[k][i];
                const i128 bd = static_cast<i128>(x.b) * y.b;
                a += static_cast<i128>(x.a) * y.a - bd;
                b += static_cast<i128>(x.a) * y.b + static_cast<i128>(x.b) * y.a + bd;
            }
        }
        if (b != 0) throw std::logic_error("small_charpoly: non-real trace");
        traces[j] = a;
    }

    for (int k = 1; k <= n; ++k) {
        i128 acc = 0;
        for (int j = 1; j <= k; ++j) acc += traces[j] * out[k - j];
        if (acc % k != 0) throw std::logic_error("small_charpoly: non-integral coefficient");
        out[k] = static_cast<std::int64_t>(-acc / k);
    }
}

SmallInertia small_inertia(int n, const std::int8_t* cells) {
    std::int64_t c[N + 1];
    small_charpoly(n, cells, c);
    SmallInertia in;
    while (in.zero < n && c[n - in.zero] == 0) ++in.zero;
    int last = 1;
    for (int i = 1; i <= n - in.zero; ++i) {
        if (c[i] == 0) continue;
        const int s = c[i] > 0 ? 1 : -1;
        if (s != last) ++in.positive;
        last = s;
    }
    in.negative = n - in.zero - in.positive;
    return in;
}

}  // namespace eisenspec::detail
