#include "eisenspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail/modular.hpp"
#include "detail/small_charpoly.hpp"

namespace eisenspec {

using detail::is_prime;
using detail::mulmod;
using detail::powmod;
using detail::sixth_root;
using detail::u64;

// ---------------------------------------------------------------- EisensteinMatrix

EisensteinMatrix::EisensteinMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative matrix order");
}

bool EisensteinMatrix::is_hermitian() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            if (at(j, i) != at(i, j).conj()) return false;
        }
    }
    return true;
}

EisensteinMatrix operator*(const EisensteinMatrix& a, const EisensteinMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix order mismatch");
    const int n = a.n_;
    EisensteinMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const EisensteinRational& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
            }
        }
    }
    return c;
}

EisensteinMatrix eisenstein_matrix(const SignedDigraph& phi) {
    EisensteinMatrix m(phi.order());
    for (int u = 0; u < phi.order(); ++u) {
        for (int v : phi.neighbors(u)) m.at(u, v) = unit_to_eis(Unit(phi.code(u, v)));
    }
    return m;
}

// ---------------------------------------------------------------- characteristic polynomials

namespace {

IntPolynomial newton_to_poly(const std::vector<mpz_class>& traces, int n) {
    // traces[j] = tr(E^j), j = 1..n
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (int j = 1; j <= k; ++j) acc += traces[j] * c[k - j];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k))) {
            throw std::logic_error("characteristic polynomial has a non-integral coefficient");
        }
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
        c[k] = -acc;
    }
    return IntPolynomial(std::move(c));
}

struct BigZ {
    mpz_class a;
    mpz_class b;
};

// acc += z * w^k
void add_rotated(BigZ& acc, const BigZ& z, int k) {
    switch (k) {
        case 0: acc.a += z.a; acc.b += z.b; break;
        case 1: acc.a -= z.b; acc.b += z.a; acc.b += z.b; break;
        case 2: acc.a -= z.a; acc.a -= z.b; acc.b += z.a; break;
        case 3: acc.a -= z.a; acc.b -= z.b; break;
        case 4: acc.a += z.b; acc.b -= z.a; acc.b -= z.b; break;
        default: acc.a += z.a; acc.a += z.b; acc.b -= z.a; break;
    }
}

IntPolynomial big_trace_recursion(const SignedDigraph& phi) {
    const int n = phi.order();
    if (n == 0) return IntPolynomial{1};
    const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const int half = (n + 1) / 2;
    std::vector<std::vector<BigZ>> powers(static_cast<std::size_t>(half), std::vector<BigZ>(nn));
    for (int i = 0; i < n; ++i) {
        for (int v : phi.neighbors(i)) {
            BigZ one{1, 0};
            add_rotated(powers[0][static_cast<std::size_t>(i * n + v)], one, phi.code(i, v));
        }
    }
    for (int t = 1; t < half; ++t) {
        const auto& prev = powers[static_cast<std::size_t>(t - 1)];
        auto& next = powers[static_cast<std::size_t>(t)];
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const BigZ& p = prev[static_cast<std::size_t>(i * n + k)];
                if (sgn(p.a) == 0 && sgn(p.b) == 0) continue;
                for (int l : phi.neighbors(k)) add_rotated(next[static_cast<std::size_t>(i * n + l)], p, phi.code(k, l));
            }
        }
    }
    std::vector<mpz_class> traces(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= half; ++j) {
        mpz_class a = 0;
        mpz_class b = 0;
        for (int i = 0; i < n; ++i) {
            a += powers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i * n + i)].a;
            b += powers[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i * n + i)].b;
        }
        if (sgn(b) != 0) throw std::logic_error("non-real trace of a Hermitian power");
        traces[static_cast<std::size_t>(j)] = a;
    }
    mpz_class t1;
    mpz_class t2;
    for (int j = half + 1; j <= n; ++j) {
        const auto& left = powers[static_cast<std::size_t>(half - 1)];
        const auto& right = powers[static_cast<std::size_t>(j - half - 1)];
        mpz_class a = 0;
        mpz_class b = 0;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const BigZ& x = left[static_cast<std::size_t>(i * n + k)];
                const BigZ& y = right[static_cast<std::size_t>(k * n + i)];
                if ((sgn(x.a) == 0 && sgn(x.b) == 0) || (sgn(y.a) == 0 && sgn(y.b) == 0)) continue;
                mpz_mul(t1.get_mpz_t(), x.b.get_mpz_t(), y.b.get_mpz_t());
                mpz_addmul(a.get_mpz_t(), x.a.get_mpz_t(), y.a.get_mpz_t());
                mpz_sub(a.get_mpz_t(), a.get_mpz_t(), t1.get_mpz_t());
                mpz_add(b.get_mpz_t(), b.get_mpz_t(), t1.get_mpz_t());
                mpz_addmul(b.get_mpz_t(), x.a.get_mpz_t(), y.b.get_mpz_t());
                mpz_addmul(b.get_mpz_t(), x.b.get_mpz_t(), y.a.get_mpz_t());
            }
        }
        if (sgn(b) != 0) throw std::logic_error("non-real trace of a Hermitian power");
        traces[static_cast<std::size_t>(j)] = a;
    }
    return newton_to_poly(traces, n);
}

// ---- multimodular route

std::vector<u64> charpoly_mod(const SignedDigraph& phi, u64 p) {
    const int n = phi.order();
    u64 unit_image[6];
    unit_image[0] = 1;
    unit_image[1] = sixth_root(p);
    for (int k = 2; k < 6; ++k) unit_image[k] = mulmod(unit_image[k - 1], unit_image[1], p);

    std::vector<std::vector<u64>> h(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u) {
        for (int v : phi.neighbors(u)) h[u][v] = unit_image[phi.code(u, v)];
    }
    // upper Hessenberg form by elimination similarity transforms
    for (int j = 0; j + 2 < n; ++j) {
        int pivot = -1;
        for (int i = j + 1; i < n; ++i) {
            if (h[i][j] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != j + 1) {
            std::swap(h[pivot], h[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
        }
        const u64 inv = powmod(h[j + 1][j], p - 2, p);
        for (int i = j + 2; i < n; ++i) {
            if (h[i][j] == 0) continue;
            const u64 factor = mulmod(h[i][j], inv, p);
            for (int c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - mulmod(factor, h[j + 1][c], p)) % p;
            for (int r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mulmod(factor, h[r][i], p)) % p;
        }
    }
    // p_m(x) = (x - h_mm) p_{m-1}(x) - sum_{i<m} h_im (prod_{l=i+1..m} h_{l,l-1}) p_{i-1}(x)
    // polynomials stored lowest degree first
    std::vector<std::vector<u64>> polys(static_cast<std::size_t>(n) + 1);
    polys[0] = {1};
    for (int m = 1; m <= n; ++m) {
        std::vector<u64> cur(static_cast<std::size_t>(m) + 1, 0);
        const auto& prev = polys[m - 1];
        const u64 diag = h[m - 1][m - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = (cur[d + 1] + prev[d]) % p;
            cur[d] = (cur[d] + p - mulmod(diag, prev[d], p)) % p;
        }
        u64 sub = 1;
        for (int i = m - 1; i >= 1; --i) {
            sub = mulmod(sub, h[i][i - 1], p);
            if (sub == 0) break;
            const u64 coef = mulmod(h[i - 1][m - 1], sub, p);
            if (coef == 0) continue;
            const auto& lower = polys[i - 1];
            for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = (cur[d] + p - mulmod(coef, lower[d], p)) % p;
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

// log2 of max_k C(n,k) (k-1)^(k/2), a bound on every coefficient magnitude.
double coefficient_bound_bits(int n) {
    double best = 0.0;
    for (int k = 2; k <= n; ++k) {
        const double log_binom = (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
        best = std::max(best, log_binom + 0.5 * k * std::log2(static_cast<double>(k - 1)));
    }
    return best;
}

}  // namespace

IntPolynomial char_poly_exact(const EisensteinMatrix& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("char_poly_exact: matrix is not Hermitian");
    const int n = m.order();
    std::vector<EisensteinRational> traces(static_cast<std::size_t>(n) + 1);
    EisensteinMatrix power = m;
    for (int j = 1; j <= n; ++j) {
        if (j > 1) power = power * m;
        EisensteinRational t;
        for (int i = 0; i < n; ++i) t += power.at(i, i);
        traces[j] = t;
    }
    std::vector<EisensteinRational> c(static_cast<std::size_t>(n) + 1);
    c[0] = EisensteinRational(1);
    for (int k = 1; k <= n; ++k) {
        EisensteinRational acc;
        for (int j = 1; j <= k; ++j) acc += traces[j] * c[k - j];
        c[k] = -acc / EisensteinRational(k);
    }
    std::vector<mpz_class> out;
    for (const EisensteinRational& x : c) {
        if (!x.is_rational() || x.a().get_den() != 1) {
            throw std::logic_error("characteristic polynomial coefficient " + x.to_string() + " is not an integer");
        }
        out.push_back(x.a().get_num());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial char_poly_trace_recursion(const SignedDigraph& phi) {
    const int n = phi.order();
    if (n <= detail::kSmallOrder) {
        std::vector<std::int8_t> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(u * n + v)] = static_cast<std::int8_t>(phi.code(u, v));
        }
        std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
        detail::small_charpoly(n, cells.data(), c.data());
        std::vector<mpz_class> out;
        for (std::int64_t x : c) out.emplace_back(static_cast<long>(x));
        return IntPolynomial(std::move(out));
    }
    return big_trace_recursion(phi);
}

IntPolynomial char_poly_multimodular(const SignedDigraph& phi) {
    const int n = phi.order();
    const double needed_bits = coefficient_bound_bits(n) + 2.0;
    mpz_class modulus = 1;
    std::vector<mpz_class> residues(static_cast<std::size_t>(n) + 1, 0);
    u64 candidate = (1ULL << 62) - ((1ULL << 62) % 6) + 1;  // 1 mod 6
    double bits = 0.0;
    while (bits < needed_bits) {
        do {
            candidate -= 6;
        } while (!is_prime(candidate));
        const u64 p = candidate;
        const std::vector<u64> low_first = charpoly_mod(phi, p);
        const mpz_class pz = mpz_class(std::to_string(p));
        mpz_class inv;
        mpz_class mod_p = modulus % pz;
        mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
        for (int d = 0; d <= n; ++d) {
            // residues indexed by power
            mpz_class target = mpz_class(std::to_string(low_first[static_cast<std::size_t>(d)]));
            mpz_class& r = residues[static_cast<std::size_t>(d)];
            mpz_class delta = (target - r % pz) % pz;
            if (sgn(delta) < 0) delta += pz;
            delta = delta * inv % pz;
            r += modulus * delta;
        }
        modulus *= pz;
        bits += std::log2(static_cast<double>(p));
    }
    const mpz_class half = modulus / 2;
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
        mpz_class r = residues[static_cast<std::size_t>(d)];
        if (r > half) r -= modulus;
        out[static_cast<std::size_t>(n - d)] = r;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial char_poly_exact(const SignedDigraph& phi) {
    if (phi.order() <= detail::kSmallOrder) return char_poly_trace_recursion(phi);
    return char_poly_multimodular(phi);
}

// ---------------------------------------------------------------- traces and census

mpz_class trace_power(const EisensteinMatrix& m, int p) {
    if (p != 2 && p != 3) throw std::invalid_argument("trace_power supports p = 2 or 3");
    EisensteinMatrix power = m * m;
    if (p == 3) power = power * m;
    EisensteinRational t;
    for (int i = 0; i < m.order(); ++i) t += power.at(i, i);
    if (!t.is_rational() || t.a().get_den() != 1) throw std::logic_error("trace is not an integer");
    return t.a().get_num();
}

long trace_power(const SignedDigraph& phi, int p) {
    if (p != 2 && p != 3) throw std::invalid_argument("trace_power supports p = 2 or 3");
    const int n = phi.order();
    // Eisenstein integer accumulator a + b w
    long a = 0;
    long b = 0;
    auto add = [&](Unit g) {
        switch (g.exponent()) {
            case 0: a += 1; break;
            case 1: b += 1; break;
            case 2: a -= 1; b += 1; break;
            case 3: a -= 1; break;
            case 4: b -= 1; break;
            default: a += 1; b -= 1; break;
        }
    };
    for (int u = 0; u < n; ++u) {
        for (int v : phi.neighbors(u)) {
            const Unit uv(phi.code(u, v));
            if (p == 2) {
                add(uv * Unit(phi.code(v, u)));
                continue;
            }
            for (int w : phi.neighbors(v)) {
                if (phi.adjacent(w, u)) add(uv * Unit(phi.code(v, w)) * Unit(phi.code(w, u)));
            }
        }
    }
    if (b != 0) throw std::logic_error("trace is not real");
    return a;
}

TriangleCensus triangle_census(const SignedDigraph& phi) {
    TriangleCensus out;
    const int n = phi.order();
    for (int u = 0; u < n; ++u) {
        for (int v : phi.neighbors(u)) {
            if (v <= u) continue;
            for (int w : phi.neighbors(v)) {
                if (w <= v || !phi.adjacent(u, w)) continue;
                const Unit g = Unit(phi.code(u, v)) * Unit(phi.code(v, w)) * Unit(phi.code(w, u));
                switch (g.twice_real_part()) {
                    case 2: ++out.s_one; break;
                    case 1: ++out.s_half; break;
                    case -1: ++out.s_neg_half; break;
                    default: ++out.s_neg_one; break;
                }
            }
        }
    }
    if (out.weighted_trace() != trace_power(phi, 3)) throw std::logic_error("triangle census disagrees with trace of E^3");
    return out;
}

Inertia inertia_of(const IntPolynomial& charpoly) { return poly_real_root_counts(charpoly); }

Inertia inertia(const SignedDigraph& phi) {
    const int n = phi.order();
    if (n == 0 || n > detail::kSmallOrder) return inertia_of(char_poly_exact(phi));
    std::int8_t cells[detail::kSmallOrder * detail::kSmallOrder];
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) cells[u * n + v] = static_cast<std::int8_t>(phi.code(u, v));
    const detail::SmallInertia in = detail::small_inertia(n, cells);
    return {in.positive, in.zero, in.negative};
}

int rank_exact(const SignedDigraph& phi) { return phi.order() - inertia(phi).zero; }

// ---------------------------------------------------------------- numerics

std::vector<double> eigenvalues_numeric(const EisensteinMatrix& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("eigenvalues_numeric: matrix is not Hermitian");
    const int n = m.order();
    const int dim = 2 * n;
    std::vector<double> s(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
    auto at = [&](int i, int j) -> double& { return s[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)]; };
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const EisensteinRational& x = m.at(i, j);
            const double re = x.real_part().get_d();
            const double im = x.b().get_d() * half_sqrt3;
            at(i, j) = re;
            at(i + n, j + n) = re;
            at(i, j + n) = -im;
            at(i + n, j) = im;
        }
    }
    double norm = 0.0;
    for (double x : s) norm += x * x;
    norm = std::sqrt(norm);
    const double threshold = 1e-12 * std::max(norm, 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                if (i != j) off += at(i, j) * at(i, j);
            }
        }
        if (std::sqrt(off) < threshold) break;
        for (int p = 0; p < dim; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < dim; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - sn * akq;
                    at(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < dim; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - sn * aqk;
                    at(q, k) = sn * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) all.push_back(at(i, i));
    std::sort(all.rbegin(), all.rend());
    std::vector<double> out;
    for (int i = 0; i < dim; i += 2) out.push_back(0.5 * (all[static_cast<std::size_t>(i)] + all[static_cast<std::size_t>(i) + 1]));
    return out;
}

std::vector<double> eigenvalues_numeric(const SignedDigraph& phi) { return eigenvalues_numeric(eisenstein_matrix(phi)); }

Spectrum spectrum(const SignedDigraph& phi) {
    Spectrum s;
    s.charpoly = char_poly_exact(phi);
    s.inertia = inertia_of(s.charpoly);
    s.numeric_eigenvalues = eigenvalues_numeric(phi);
    return s;
}

// ---------------------------------------------------------------- cycles and symmetry

Unit cycle_gain(const SignedDigraph& phi, const VertexCycle& cycle) {
    const auto& vs = cycle.vertices;
    if (vs.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    Unit g;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const int u = vs[i];
        const int v = vs[(i + 1) % vs.size()];
        if (u < 0 || v < 0 || u >= phi.order() || v >= phi.order() || u == v || !phi.adjacent(u, v)) {
            throw std::invalid_argument("cycle step " + std::to_string(u) + "->" + std::to_string(v) + " is not an edge");
        }
        g *= Unit(phi.code(u, v));
    }
    return g;
}

bool spectrum_is_symmetric(const SignedDigraph& phi) { return char_poly_exact(phi).has_parity_symmetry(); }

bool verify_interlacing(const SignedDigraph& phi, std::span<const int> subset) {
    constexpr double tol = 1e-8;
    const std::vector<double> lambda = eigenvalues_numeric(phi);
    const std::vector<double> mu = eigenvalues_numeric(induced(phi, subset));
    const std::size_t n = lambda.size();
    const std::size_t m = mu.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (mu[i] > lambda[i] + tol) return false;
        if (mu[i] < lambda[n - m + i] - tol) return false;
    }
    return true;
}

}  // namespace eisenspec
