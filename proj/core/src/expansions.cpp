#include "eisenspec/expansions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisenspec {

namespace {

void check_tau(const SignedDigraph& phi, const ExpansionVector& tau) {
    if (static_cast<int>(tau.size()) != phi.order()) throw std::invalid_argument("expansion vector length mismatch");
    for (int t : tau) {
        if (t < 1) throw std::invalid_argument("expansion vector entries must be positive");
    }
}

SignedDigraph expand(const SignedDigraph& phi, const ExpansionVector& tau, bool cliques) {
    check_tau(phi, tau);
    std::vector<int> start(tau.size() + 1, 0);
    std::partial_sum(tau.begin(), tau.end(), start.begin() + 1);
    DigraphBuilder b(start.back());
    for (const GainEntry& e : phi.entries()) {
        for (int x = start[e.u]; x < start[e.u + 1]; ++x) {
            for (int y = start[e.v]; y < start[e.v + 1]; ++y) b.set(x, y, e.gain);
        }
    }
    if (cliques) {
        for (std::size_t j = 0; j < tau.size(); ++j) {
            for (int x = start[j]; x < start[j + 1]; ++x) {
                for (int y = x + 1; y < start[j + 1]; ++y) b.set(x, y, Unit::one());
            }
        }
    }
    return b.build();
}

// True iff row_u[z] = c * row_v[z] for all z outside {u,v}. If c is unset, the first
// jointly nonzero coordinate fixes it.
bool rows_proportional(const SignedDigraph& phi, int u, int v, std::optional<Unit> c) {
    for (int z = 0; z < phi.order(); ++z) {
        if (z == u || z == v) continue;
        const int a = phi.code(u, z);
        const int b = phi.code(v, z);
        if ((a < 0) != (b < 0)) return false;
        if (a < 0) continue;
        const Unit ratio = Unit(a) * Unit(b).conj();
        if (!c) c = ratio;
        if (*c != ratio) return false;
    }
    return true;
}

std::vector<std::vector<int>> classes_of(const SignedDigraph& phi, bool (*related)(const SignedDigraph&, int, int)) {
    const int n = phi.order();
    std::vector<int> owner(n, -1);
    std::vector<std::vector<int>> out;
    for (int u = 0; u < n; ++u) {
        if (owner[u] >= 0) continue;
        owner[u] = static_cast<int>(out.size());
        out.push_back({u});
        for (int v = u + 1; v < n; ++v) {
            if (owner[v] < 0 && related(phi, u, v)) {
                owner[v] = owner[u];
                out.back().push_back(v);
            }
        }
    }
    return out;
}

Reduction reduce_by(const SignedDigraph& phi, bool (*related)(const SignedDigraph&, int, int)) {
    Reduction r{phi, {}};
    for (int v = 0; v < phi.order(); ++v) r.blocks.push_back({v});
    while (true) {
        const auto classes = classes_of(r.reduced, related);
        if (static_cast<int>(classes.size()) == r.reduced.order()) return r;
        std::vector<int> keep;
        std::vector<std::vector<int>> blocks;
        for (const auto& cls : classes) {
            keep.push_back(cls.front());
            std::vector<int> merged;
            for (int member : cls) merged.insert(merged.end(), r.blocks[member].begin(), r.blocks[member].end());
            std::sort(merged.begin(), merged.end());
            blocks.push_back(std::move(merged));
        }
        // classes are ordered by smallest member, so `keep` is increasing
        r.reduced = induced(r.reduced, keep);
        r.blocks = std::move(blocks);
    }
}

}  // namespace

SignedDigraph twin_expand(const SignedDigraph& phi, const ExpansionVector& tau) { return expand(phi, tau, false); }

SignedDigraph clique_expand(const SignedDigraph& phi, const ExpansionVector& tau) { return expand(phi, tau, true); }

bool are_twins(const SignedDigraph& phi, int u, int v) {
    if (u == v || phi.adjacent(u, v)) return false;
    return rows_proportional(phi, u, v, std::nullopt);
}

bool are_pseudotwins(const SignedDigraph& phi, int u, int v) {
    if (u == v || !phi.adjacent(u, v)) return false;
    return rows_proportional(phi, u, v, Unit(phi.code(u, v)));
}

std::vector<Edge> find_twins(const SignedDigraph& phi) {
    std::vector<Edge> out;
    for (int u = 0; u < phi.order(); ++u) {
        for (int v = u + 1; v < phi.order(); ++v) {
            if (are_twins(phi, u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Edge> find_pseudotwins(const SignedDigraph& phi) {
    std::vector<Edge> out;
    for (int u = 0; u < phi.order(); ++u) {
        for (int v : phi.neighbors(u)) {
            if (u < v && are_pseudotwins(phi, u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::vector<int>> twin_classes(const SignedDigraph& phi) { return classes_of(phi, &are_twins); }

std::vector<std::vector<int>> pseudotwin_classes(const SignedDigraph& phi) { return classes_of(phi, &are_pseudotwins); }

Reduction reduce_twins(const SignedDigraph& phi) { return reduce_by(phi, &are_twins); }

Reduction reduce_pseudotwins(const SignedDigraph& phi) { return reduce_by(phi, &are_pseudotwins); }

SignedDigraph twin_reduce(const SignedDigraph& phi) { return reduce_twins(phi).reduced; }

SignedDigraph clique_reduce(const SignedDigraph& phi) { return reduce_pseudotwins(phi).reduced; }

ExpansionVector parse_expansion_vector(const std::string& text) {
    ExpansionVector tau;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad expansion vector entry '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw std::invalid_argument("bad expansion vector entry '" + item + "'");
        }
        if (value < 1) throw std::invalid_argument("expansion vector entries must be positive");
        tau.push_back(value);
    }
    if (tau.empty()) throw std::invalid_argument("empty expansion vector");
    return tau;
}

}  // namespace eisenspec
