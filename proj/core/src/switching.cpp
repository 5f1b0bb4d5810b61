#include "eisenspec/switching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "eisenspec/expansions.hpp"
#include "eisenspec/isomorphism.hpp"
#include "eisenspec/spectra.hpp"

namespace eisenspec {

namespace {

Unit unit_of(int code) { return Unit(code); }

// child, parent pairs in BFS order; roots appear with parent -1
std::vector<Edge> forest_order(int n, const SpanningForest& tree) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : tree) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Edge> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        order.emplace_back(root, -1);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                order.emplace_back(v, u);
                queue.push_back(v);
            }
        }
    }
    return order;
}

void check_forest(const SignedDigraph& phi, const SpanningForest& tree) {
    const int n = phi.order();
    const UnderlyingGraph g = phi.underlying();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : tree) {
        if (u < 0 || v < 0 || u >= n || v >= n || !phi.adjacent(u, v))
            throw std::invalid_argument("normalize_tree: tree edge is not an edge of the digraph");
        const int ru = find(u);
        const int rv = find(v);
        if (ru == rv) throw std::invalid_argument("normalize_tree: tree contains a cycle");
        parent[ru] = rv;
    }
    if (static_cast<int>(tree.size()) != n - component_count(g))
        throw std::invalid_argument("normalize_tree: tree does not span every component");
}

SwitchingFunction tree_switch(const SignedDigraph& phi, const SpanningForest& tree) {
    SwitchingFunction x = SwitchingFunction::identity(phi.order());
    for (const auto& [child, parent] : forest_order(phi.order(), tree)) {
        if (parent < 0) continue;
        x.x[child] = x.x[parent] * unit_of(phi.code(parent, child));
    }
    return x;
}

SignedDigraph maybe_converse(const SignedDigraph& phi, bool conjugated) {
    return conjugated ? converse(phi) : phi;
}

// Vertex colours from the multiset of incident gain codes; comparable across a and b.
std::pair<std::vector<int>, std::vector<int>> gain_profile_colors(const SignedDigraph& a, const SignedDigraph& b) {
    auto profile = [](const SignedDigraph& phi, int u) {
        std::array<int, 6> counts{};
        for (int v : phi.neighbors(u)) ++counts[static_cast<std::size_t>(phi.code(u, v))];
        return counts;
    };
    std::map<std::array<int, 6>, int> ids;
    for (const SignedDigraph* phi : {&a, &b})
        for (int u = 0; u < phi->order(); ++u) ids.emplace(profile(*phi, u), 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    auto colors = [&](const SignedDigraph& phi) {
        std::vector<int> out(static_cast<std::size_t>(phi.order()));
        for (int u = 0; u < phi.order(); ++u) out[u] = ids.at(profile(phi, u));
        return out;
    };
    return {colors(a), colors(b)};
}

bool cheap_invariants_match(const SignedDigraph& a, const SignedDigraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const UnderlyingGraph ga = a.underlying();
    const UnderlyingGraph gb = b.underlying();
    if (degree_sequence(ga) != degree_sequence(gb)) return false;
    const TriangleCensus ta = triangle_census(a);
    const TriangleCensus tb = triangle_census(b);
    return ta.s_one == tb.s_one && ta.s_half == tb.s_half && ta.s_neg_half == tb.s_neg_half &&
           ta.s_neg_one == tb.s_neg_one;
}

std::vector<int> block_sizes(const Reduction& r) {
    std::vector<int> sizes;
    sizes.reserve(r.blocks.size());
    for (const auto& block : r.blocks) sizes.push_back(static_cast<int>(block.size()));
    return sizes;
}

// Tries every isomorphism of the quotients, lifted blockwise, against labeled switching equivalence.
std::optional<SwitchingIsomorphism> search_quotient(const SignedDigraph& a, const SignedDigraph& b,
                                                    const Reduction& ra, const Reduction& rb, bool allow_converse) {
    std::vector<int> ca = block_sizes(ra);
    std::vector<int> cb = block_sizes(rb);
    {
        std::vector<int> sa = ca;
        std::vector<int> sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::optional<SwitchingIsomorphism> found;
    const int n = a.order();
    for_each_isomorphism(
        ra.reduced.underlying(), rb.reduced.underlying(),
        [&](std::span<const int> pi) {
            std::vector<int> bijection(static_cast<std::size_t>(n), -1);
            for (std::size_t r = 0; r < ra.blocks.size(); ++r) {
                const auto& from = ra.blocks[r];
                const auto& to = rb.blocks[static_cast<std::size_t>(pi[r])];
                for (std::size_t i = 0; i < from.size(); ++i) bijection[from[i]] = to[i];
            }
            const SignedDigraph moved = relabel(a, bijection);
            for (const bool conj : {false, true}) {
                if (conj && !allow_converse) break;
                if (auto x = switching_equivalent_labeled(maybe_converse(moved, conj), b)) {
                    found = SwitchingIsomorphism{bijection, std::move(*x), conj};
                    return false;
                }
            }
            return true;
        },
        ca, cb);
    return found;
}

}  // namespace

SignedDigraph apply_switch(const SignedDigraph& phi, const SwitchingFunction& x) {
    if (x.size() != phi.order()) throw std::invalid_argument("apply_switch: size mismatch");
    DigraphBuilder out(phi.order());
    for (const GainEntry& e : phi.entries()) out.set(e.u, e.v, x.x[e.u] * e.gain * x.x[e.v].inverse());
    return out.build();
}

SpanningForest bfs_forest(const UnderlyingGraph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    SpanningForest tree;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (seen[v]) continue;
                seen[v] = 1;
                tree.emplace_back(std::min(u, v), std::max(u, v));
                queue.push_back(v);
            }
        }
    }
    return tree;
}

TreeNormalForm normalize_tree(const SignedDigraph& phi, const std::optional<SpanningForest>& tree) {
    SpanningForest t = tree ? *tree : bfs_forest(phi.underlying());
    if (tree) check_forest(phi, t);
    SwitchingFunction x = tree_switch(phi, t);
    SignedDigraph base = apply_switch(phi, x);
    return {std::move(t), std::move(base), std::move(x)};
}

std::map<Edge, Unit> fundamental_cycle_gains(const SignedDigraph& phi, const SpanningForest& tree) {
    const TreeNormalForm nf = normalize_tree(phi, tree);
    std::vector<Edge> sorted_tree;
    for (const auto& [u, v] : nf.tree) sorted_tree.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted_tree.begin(), sorted_tree.end());
    std::map<Edge, Unit> out;
    for (const GainEntry& e : nf.base.entries()) {
        if (std::binary_search(sorted_tree.begin(), sorted_tree.end(), Edge{e.u, e.v})) continue;
        out.emplace(Edge{e.u, e.v}, e.gain);
    }
    return out;
}

std::optional<SwitchingFunction> switching_equivalent_labeled(const SignedDigraph& a, const SignedDigraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    const UnderlyingGraph g = a.underlying();
    if (!(g == b.underlying())) return std::nullopt;
    const SpanningForest tree = bfs_forest(g);
    const TreeNormalForm na = normalize_tree(a, tree);
    const TreeNormalForm nb = normalize_tree(b, tree);
    if (!(na.base == nb.base)) return std::nullopt;
    SwitchingFunction x = SwitchingFunction::identity(a.order());
    for (int u = 0; u < a.order(); ++u) x.x[u] = nb.applied.x[u].inverse() * na.applied.x[u];
    return x;
}

std::optional<SwitchingIsomorphism> switching_isomorphic(const SignedDigraph& a, const SignedDigraph& b,
                                                         bool allow_converse) {
    if (!cheap_invariants_match(a, b)) return std::nullopt;

    const Reduction ta = reduce_twins(a);
    const Reduction tb = reduce_twins(b);
    if (ta.blocks.size() != tb.blocks.size()) return std::nullopt;
    if (static_cast<int>(ta.blocks.size()) < a.order()) return search_quotient(a, b, ta, tb, allow_converse);

    const Reduction pa = reduce_pseudotwins(a);
    const Reduction pb = reduce_pseudotwins(b);
    if (pa.blocks.size() != pb.blocks.size()) return std::nullopt;
    return search_quotient(a, b, pa, pb, allow_converse);
}

SignedDigraph apply_isomorphism(const SignedDigraph& source, const SwitchingIsomorphism& witness) {
    return apply_switch(maybe_converse(relabel(source, witness.bijection), witness.conjugated), witness.switching);
}

bool verify_switching_isomorphism(const SignedDigraph& source, const SignedDigraph& target,
                                  const SwitchingIsomorphism& witness) {
    if (static_cast<int>(witness.bijection.size()) != source.order() || witness.switching.size() != target.order())
        return false;
    std::vector<int> seen(witness.bijection.size(), 0);
    for (int v : witness.bijection) {
        if (v < 0 || v >= source.order() || seen[v]++) return false;
    }
    return apply_isomorphism(source, witness) == target;
}

bool isomorphic(const SignedDigraph& a, const SignedDigraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const auto [ca, cb] = gain_profile_colors(a, b);
    {
        std::vector<int> sa = ca;
        std::vector<int> sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    bool found = false;
    for_each_isomorphism(
        a.underlying(), b.underlying(),
        [&](std::span<const int> pi) {
            for (const GainEntry& e : a.entries()) {
                if (b.code(pi[e.u], pi[e.v]) != e.gain.exponent()) return true;
            }
            found = true;
            return false;
        },
        ca, cb);
    return found;
}

std::string canonical_form(const SignedDigraph& phi, bool allow_converse) {
    const int n = phi.order();
    if (n > kCanonicalFormLimit) throw std::invalid_argument("canonical_form: order above 12");
    const UnderlyingGraph g = phi.underlying();
    const UnderlyingGraph canon = canonical_graph(g);
    const std::vector<Edge> order = forest_order(n, bfs_forest(canon));
    const std::vector<Edge> edges = canon.edges();

    std::string best;
    std::vector<int> inverse(static_cast<std::size_t>(n));
    std::vector<Unit> x(static_cast<std::size_t>(n));
    std::string code(edges.size(), '0');
    for_each_isomorphism(g, canon, [&](std::span<const int> pi) {
        for (int v = 0; v < n; ++v) inverse[pi[v]] = v;
        for (const bool conj : {false, true}) {
            if (conj && !allow_converse) break;
            auto gain = [&](int p, int q) {
                const Unit u = unit_of(phi.code(inverse[p], inverse[q]));
                return conj ? u.conj() : u;
            };
            for (const auto& [child, parent] : order) x[child] = parent < 0 ? Unit::one() : x[parent] * gain(parent, child);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                const auto [p, q] = edges[i];
                code[i] = static_cast<char>('0' + (x[p] * gain(p, q) * x[q].inverse()).exponent());
            }
            if (best.empty() || code < best) best = code;
        }
        return true;
    });
    return to_graph6(canon) + ":" + best;
}

std::optional<SignedDigraph> find_nonisomorphic_switch_partner(const SignedDigraph& phi) {
    const int n = phi.order();
    if (phi.size() == 0) return std::nullopt;

    auto try_cut = [&](std::span<const int> cut) -> std::optional<SignedDigraph> {
        for (int k = 1; k < 6; ++k) {
            SwitchingFunction x = SwitchingFunction::identity(n);
            for (int u : cut) x.x[u] = Unit(k);
            SignedDigraph partner = apply_switch(phi, x);
            if (!isomorphic(partner, phi)) return partner;
        }
        return std::nullopt;
    };

    for (int u = 0; u < n; ++u) {
        const int cut[] = {u};
        if (auto p = try_cut(cut)) return p;
    }
    for (const GainEntry& e : phi.entries()) {
        const int cut[] = {e.u, e.v};
        if (auto p = try_cut(cut)) return p;
    }
    if (n > kCanonicalFormLimit) return std::nullopt;
    std::vector<int> cut;
    for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
        if (std::popcount(mask) <= 1) continue;
        cut.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1U << v)) cut.push_back(v);
        if (auto p = try_cut(cut)) return p;
    }
    return std::nullopt;
}

}  // namespace eisenspec
