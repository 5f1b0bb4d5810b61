#include "eisenspec/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace eisenspec {

namespace {

// Replaces values by their rank among the distinct values.
std::vector<int> rank_compress(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
    }
    return out;
}

int distinct_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace

std::vector<int> refine_colors(const UnderlyingGraph& g, std::span<const int> initial) {
    const int n = g.order();
    std::vector<int> colors = initial.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0)
                                              : rank_compress(std::vector<int>(initial.begin(), initial.end()));
    if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("colour vector has wrong length");
    int classes = distinct_count(colors);
    while (true) {
        std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            auto& sig = signature[static_cast<std::size_t>(u)];
            sig.push_back(colors[static_cast<std::size_t>(u)]);
            std::vector<int> around;
            around.reserve(g.neighbors(u).size());
            for (int v : g.neighbors(u)) around.push_back(colors[static_cast<std::size_t>(v)]);
            std::sort(around.begin(), around.end());
            sig.insert(sig.end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> distinct = signature;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int u = 0; u < n; ++u) {
            colors[static_cast<std::size_t>(u)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(u)]) - distinct.begin());
        }
        const int now = static_cast<int>(distinct.size());
        if (now == classes) break;
        classes = now;
    }
    return colors;
}

bool for_each_isomorphism(const UnderlyingGraph& g, const UnderlyingGraph& h, const IsomorphismVisitor& visit,
                          std::span<const int> g_colors, std::span<const int> h_colors) {
    const int n = g.order();
    if (n != h.order() || g.size() != h.size()) return true;
    if (degree_sequence(g) != degree_sequence(h)) return true;
    if (g_colors.empty() != h_colors.empty()) throw std::invalid_argument("colours given for only one graph");
    if (!g_colors.empty()) {
        std::vector<int> a(g_colors.begin(), g_colors.end());
        std::vector<int> b(h_colors.begin(), h_colors.end());
        if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) {
            throw std::invalid_argument("colour vector has wrong length");
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return true;
    }
    const std::vector<int> cg = refine_colors(g, g_colors);
    const std::vector<int> ch = refine_colors(h, h_colors);
    {
        std::vector<int> a = cg;
        std::vector<int> b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return true;
    }
    if (n == 0) return visit({});

    std::vector<int> class_size(static_cast<std::size_t>(distinct_count(cg)), 0);
    for (int c : cg) ++class_size[static_cast<std::size_t>(c)];

    // Static search order: most constrained vertex next.
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> placed_neighbors(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            const auto key = [&](int x) {
                return std::make_tuple(-placed_neighbors[static_cast<std::size_t>(x)],
                                       class_size[static_cast<std::size_t>(cg[static_cast<std::size_t>(x)])], x);
            };
            if (key(v) < key(best)) best = v;
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
        for (int w : g.neighbors(best)) ++placed_neighbors[static_cast<std::size_t>(w)];
    }

    std::vector<std::vector<int>> by_color(class_size.size());
    for (int v = 0; v < n; ++v) by_color[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<int> mapping(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    bool keep_going = true;

    auto recurse = [&](auto&& self, int depth) -> void {
        if (!keep_going) return;
        if (depth == n) {
            keep_going = visit(mapping);
            return;
        }
        const int gv = order[static_cast<std::size_t>(depth)];
        for (int hv : by_color[static_cast<std::size_t>(cg[static_cast<std::size_t>(gv)])]) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            bool ok = true;
            for (int e = 0; e < depth && ok; ++e) {
                const int prev = order[static_cast<std::size_t>(e)];
                ok = g.adjacent(gv, prev) == h.adjacent(hv, mapping[static_cast<std::size_t>(prev)]);
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(gv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
            self(self, depth + 1);
            used[static_cast<std::size_t>(hv)] = 0;
            mapping[static_cast<std::size_t>(gv)] = -1;
            if (!keep_going) return;
        }
    };
    recurse(recurse, 0);
    return keep_going;
}

std::vector<std::vector<int>> graph_isomorphisms(const UnderlyingGraph& g, const UnderlyingGraph& h) {
    std::vector<std::vector<int>> out;
    for_each_isomorphism(g, h, [&](std::span<const int> m) {
        out.emplace_back(m.begin(), m.end());
        return true;
    });
    return out;
}

namespace {

struct CanonicalSearch {
    const UnderlyingGraph& g;
    std::vector<std::uint8_t> best_code;
    std::vector<int> best_labeling;

    std::vector<std::uint8_t> code_for(const std::vector<int>& position) const {
        const int n = g.order();
        std::vector<int> vertex_at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) vertex_at[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = v;
        std::vector<std::uint8_t> code;
        code.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 2);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                code.push_back(g.adjacent(vertex_at[static_cast<std::size_t>(i)], vertex_at[static_cast<std::size_t>(j)]) ? 1 : 0);
            }
        }
        return code;
    }

    bool swappable(int u, int v) const {
        for (int w = 0; w < g.order(); ++w) {
            if (w == u || w == v) continue;
            if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
        }
        return true;
    }

    void search(std::vector<int> colors) {
        colors = refine_colors(g, colors);
        const int n = g.order();
        const int classes = distinct_count(colors);
        if (classes == n) {
            std::vector<std::uint8_t> code = code_for(colors);
            if (best_labeling.empty() || code < best_code) {
                best_code = std::move(code);
                best_labeling = colors;
            }
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(classes), 0);
        for (int c : colors) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] < 2) ++target;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] == target) cell.push_back(v);
        }
        std::vector<int> tried;
        for (int v : cell) {
            // Interchangeable vertices lead to identical subtrees.
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return swappable(t, v); })) continue;
            tried.push_back(v);
            std::vector<int> next(static_cast<std::size_t>(n));
            for (int u = 0; u < n; ++u) next[static_cast<std::size_t>(u)] = 2 * colors[static_cast<std::size_t>(u)] + 1;
            next[static_cast<std::size_t>(v)] -= 1;
            search(std::move(next));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const UnderlyingGraph& g) {
    if (g.order() == 0) return {};
    CanonicalSearch s{g, {}, {}};
    s.search(std::vector<int>(static_cast<std::size_t>(g.order()), 0));
    return s.best_labeling;
}

UnderlyingGraph canonical_graph(const UnderlyingGraph& g) { return relabel(g, canonical_labeling(g)); }

}  // namespace eisenspec
