#include "eisenspec/classify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "eisenspec/spectra.hpp"

namespace eisenspec {

namespace {

void require_connected(const SignedDigraph& phi, const char* who) {
    if (!is_connected(phi.underlying())) throw std::invalid_argument(std::string(who) + ": digraph is not connected");
}

ClassificationVerdict none(std::string why) {
    ClassificationVerdict v;
    v.detail = std::move(why);
    return v;
}

std::optional<ClassificationVerdict> match(const SignedDigraph& phi, const SignedDigraph& target, Family family,
                                           std::vector<int> parameters, std::string detail) {
    auto witness = switching_isomorphic(phi, target);
    if (!witness) return std::nullopt;
    ClassificationVerdict v;
    v.family = family;
    v.parameters = std::move(parameters);
    v.detail = std::move(detail);
    v.representative = target;
    v.witness = std::move(*witness);
    return v;
}

std::vector<int> sizes_of(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> out;
    for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
    return out;
}

enum class CliqueKind { K, KStar, Other };

CliqueKind clique_kind(const SignedDigraph& phi, std::vector<int> subset) {
    if (subset.size() <= 2) return CliqueKind::K;
    std::sort(subset.begin(), subset.end());
    const SignedDigraph sub = induced(phi, subset);
    const TriangleCensus tc = triangle_census(sub);
    if (tc.s_one == tc.total()) return CliqueKind::K;
    const Inertia in = inertia(sub);
    if (in.positive == 1 && in.zero == 0) return CliqueKind::KStar;
    return CliqueKind::Other;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Orders the cycle of a 2-regular connected reduced graph starting at vertex 0.
std::optional<std::vector<int>> cycle_order(const UnderlyingGraph& g) {
    const int n = g.order();
    if (n < 3 || !is_connected(g)) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    std::vector<int> order{0};
    int prev = -1;
    int cur = 0;
    while (static_cast<int>(order.size()) < n) {
        const auto& nb = g.neighbors(cur);
        const int next = nb[0] != prev ? nb[0] : nb[1];
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Dihedral images of positions 0..4: out[j] = source position placed at j.
std::vector<std::vector<int>> dihedral5() {
    std::vector<std::vector<int>> out;
    for (int r = 0; r < 5; ++r) {
        std::vector<int> rot(5);
        std::vector<int> ref(5);
        for (int j = 0; j < 5; ++j) {
            rot[j] = (j + r) % 5;
            ref[j] = ((r - j) % 5 + 5) % 5;
        }
        out.push_back(rot);
        out.push_back(ref);
    }
    return out;
}

Family c5_family(C5Type t) {
    switch (t) {
        case C5Type::A: return Family::C5TypeA;
        case C5Type::B: return Family::C5TypeB;
        case C5Type::C: return Family::C5TypeC;
        default: return Family::C5TypeD;
    }
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::None: return "NONE";
        case Family::Rank2CompleteBipartite: return "RANK2_COMPLETE_BIPARTITE";
        case Family::Rank3Triangle: return "RANK3_TRIANGLE";
        case Family::Rank3T4Pos: return "RANK3_T4_POS";
        case Family::Rank3T4Neg: return "RANK3_T4_NEG";
        case Family::Lambda2NegK: return "LAMBDA2NEG_K";
        case Family::Lambda2NegKStar: return "LAMBDA2NEG_KSTAR";
        case Family::C5TypeA: return "C5_TYPE_A";
        case Family::C5TypeB: return "C5_TYPE_B";
        case Family::C5TypeC: return "C5_TYPE_C";
        case Family::C5TypeD: return "C5_TYPE_D";
        case Family::SemicompleteG: return "SEMICOMPLETE_G";
        case Family::SemicompleteTilde: return "SEMICOMPLETE_TILDE";
        case Family::SemicompleteHat: return "SEMICOMPLETE_HAT";
    }
    return "NONE";
}

ClassificationVerdict classify_rank2(const SignedDigraph& phi) {
    require_connected(phi, "classify_rank2");
    const int rank = rank_exact(phi);
    if (rank != 2) return none("rank " + std::to_string(rank));

    const int n = phi.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : phi.neighbors(u)) {
            if (side[v] < 0) {
                side[v] = 1 - side[u];
                stack.push_back(v);
            } else if (side[v] == side[u]) {
                throw std::logic_error("classify_rank2: rank-2 digraph with an odd cycle");
            }
        }
    }
    int p = static_cast<int>(std::count(side.begin(), side.end(), 0));
    int q = n - p;
    if (p > q) std::swap(p, q);
    const SignedDigraph target = named::complete_bipartite(p, q);
    auto v = match(phi, target, Family::Rank2CompleteBipartite, {p, q}, "K_{" + std::to_string(p) + "," +
                                                                            std::to_string(q) + "}");
    if (!v) throw std::logic_error("classify_rank2: rank-2 digraph not switching isomorphic to K_{p,q}");
    return *v;
}

ClassificationVerdict classify_rank3(const SignedDigraph& phi) {
    require_connected(phi, "classify_rank3");
    const int rank = rank_exact(phi);
    if (rank != 3) return none("rank " + std::to_string(rank));

    const Reduction red = reduce_twins(phi);
    struct Candidate {
        SignedDigraph digraph;
        Family family;
        const char* name;
    };
    const std::array<Candidate, 6> candidates{{
        {named::complete(3), Family::Rank3Triangle, "K3"},
        {named::complete_star(3), Family::Rank3Triangle, "K3*"},
        {negate(named::complete(3)), Family::Rank3Triangle, "-K3"},
        {negate(named::complete_star(3)), Family::Rank3Triangle, "-K3*"},
        {named::t4(true), Family::Rank3T4Pos, "T4+"},
        {named::t4(false), Family::Rank3T4Neg, "T4-"},
    }};
    const std::vector<int> sizes = sizes_of(red.blocks);
    for (const Candidate& c : candidates) {
        if (c.digraph.order() != red.reduced.order()) continue;
        const auto reduced_match = switching_isomorphic(red.reduced, c.digraph);
        if (!reduced_match) continue;
        ExpansionVector tau(sizes.size());
        for (std::size_t r = 0; r < sizes.size(); ++r) tau[reduced_match->bijection[r]] = sizes[r];
        const SignedDigraph target = twin_expand(c.digraph, tau);
        if (auto v = match(phi, target, c.family, tau, c.name)) return *v;
        throw std::logic_error("classify_rank3: reduced class matched but the expansion did not lift");
    }
    throw std::logic_error("classify_rank3: rank-3 digraph outside the triangle and T4 expansions");
}

ClassificationVerdict classify_lambda2_negative(const SignedDigraph& phi) {
    const int n = phi.order();
    if (n == 0) return none("empty digraph");
    const Inertia in = inertia(phi);
    if (in.positive != 1 || in.zero != 0) {
        return none("inertia (" + std::to_string(in.positive) + "," + std::to_string(in.zero) + "," +
                    std::to_string(in.negative) + ")");
    }
    if (phi.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2)
        throw std::logic_error("classify_lambda2_negative: non-complete digraph with one positive eigenvalue");
    const TriangleCensus tc = triangle_census(phi);
    if (tc.s_one == tc.total()) {
        if (auto v = match(phi, named::complete(n), Family::Lambda2NegK, {n}, "K")) return *v;
    } else if (tc.s_half == n - 2 && tc.s_one == tc.total() - (n - 2)) {
        if (auto v = match(phi, named::complete_star(n), Family::Lambda2NegKStar, {n}, "K*")) return *v;
    }
    throw std::logic_error("classify_lambda2_negative: complete digraph outside the K and K* classes");
}

std::vector<NecessaryViolation> check_two_nonneg_necessary(const SignedDigraph& phi) {
    const int n = phi.order();
    std::vector<NecessaryViolation> out;
    auto triangle_positive = [&](int a, int b, int c) {
        return cycle_gain(phi, VertexCycle{{a, b, c}}).twice_real_part() > 0;
    };
    auto induced_cycle = [&](const std::vector<int>& s) -> std::optional<VertexCycle> {
        const int k = static_cast<int>(s.size());
        int edges = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges += phi.adjacent(s[i], s[j]) ? 1 : 0;
        if (edges != k) return std::nullopt;
        std::vector<int> order{s[0]};
        std::vector<char> used(static_cast<std::size_t>(k), 0);
        used[0] = 1;
        for (int step = 1; step < k; ++step) {
            bool extended = false;
            for (int i = 0; i < k && !extended; ++i) {
                if (!used[i] && phi.adjacent(order.back(), s[i])) {
                    used[i] = 1;
                    order.push_back(s[i]);
                    extended = true;
                }
            }
            if (!extended) return std::nullopt;
        }
        if (!phi.adjacent(order.back(), order.front())) return std::nullopt;
        return VertexCycle{order};
    };

    std::vector<int> s(4);
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) edges += phi.adjacent(s[i], s[j]) ? 1 : 0;
                    if (edges == 6) {
                        const bool any_positive = triangle_positive(s[0], s[1], s[2]) ||
                                                  triangle_positive(s[0], s[1], s[3]) ||
                                                  triangle_positive(s[0], s[2], s[3]) ||
                                                  triangle_positive(s[1], s[2], s[3]);
                        if (!any_positive) out.push_back({1, s});
                    } else if (edges == 4) {
                        if (auto c = induced_cycle(s); c && cycle_gain(phi, *c) == Unit::one()) out.push_back({2, s});
                    }
                }
    std::vector<int> t(5);
    for (t[0] = 0; t[0] < n; ++t[0])
        for (t[1] = t[0] + 1; t[1] < n; ++t[1])
            for (t[2] = t[1] + 1; t[2] < n; ++t[2])
                for (t[3] = t[2] + 1; t[3] < n; ++t[3])
                    for (t[4] = t[3] + 1; t[4] < n; ++t[4]) {
                        if (auto c = induced_cycle(t); c && cycle_gain(phi, *c).twice_real_part() >= 0)
                            out.push_back({3, t});
                    }
    return out;
}

ClassificationVerdict c5_signature_type(const SignedDigraph& phi) {
    const UnderlyingGraph g = phi.underlying();
    const Reduction shape = reduce_pseudotwins(positive_signature(g));
    const auto order = cycle_order(shape.reduced.underlying());
    if (shape.reduced.order() != 5 || !order)
        throw std::invalid_argument("c5_signature_type: underlying graph is not a clique expansion of C5");

    std::array<std::vector<int>, 5> block;
    for (int i = 0; i < 5; ++i) block[i] = shape.blocks[(*order)[i]];

    std::array<CliqueKind, 5> block_kind{};
    std::array<CliqueKind, 5> pair_kind{};  // blocks i and i+1
    for (int i = 0; i < 5; ++i) {
        block_kind[i] = clique_kind(phi, block[i]);
        pair_kind[i] = clique_kind(phi, concat(block[i], block[(i + 1) % 5]));
    }
    auto count = [](const auto& kinds, CliqueKind k) { return std::count(kinds.begin(), kinds.end(), k); };
    if (count(block_kind, CliqueKind::Other) > 0 || count(pair_kind, CliqueKind::Other) > 0)
        return none("a block or adjacent block pair is neither K nor K*");

    // gains of the induced 5-cycles, one vertex per block
    std::set<int> gains;
    std::array<std::size_t, 5> pick{};
    while (true) {
        VertexCycle c;
        for (int i = 0; i < 5; ++i) c.vertices.push_back(block[i][pick[i]]);
        gains.insert(cycle_gain(phi, c).exponent());
        int i = 0;
        while (i < 5 && ++pick[i] == block[i].size()) pick[i++] = 0;
        if (i == 5) break;
    }
    const bool all_negative = gains == std::set<int>{3};

    const auto kstar_blocks = count(block_kind, CliqueKind::KStar);
    std::vector<int> kstar_pairs;
    for (int i = 0; i < 5; ++i)
        if (pair_kind[i] == CliqueKind::KStar) kstar_pairs.push_back(i);

    std::optional<C5Type> type;
    if (kstar_blocks == 0 && kstar_pairs.empty()) {
        if (all_negative) type = C5Type::A;
        else if (gains == std::set<int>{2} || gains == std::set<int>{4}) type = C5Type::C;
    } else if (kstar_pairs.size() == 2 && all_negative) {
        // the two K* pairs must meet in one block X
        const int a = kstar_pairs[0];
        const int b = kstar_pairs[1];
        int shared = -1;
        if ((a + 1) % 5 == b) shared = b;
        if ((b + 1) % 5 == a) shared = a;
        if (shared >= 0) {
            const bool x_ok = block_kind[shared] == CliqueKind::KStar || block[shared].size() == 2;
            if (x_ok && kstar_blocks == (block_kind[shared] == CliqueKind::KStar ? 1 : 0)) type = C5Type::B;
        }
    } else if (kstar_pairs.size() == 1 && kstar_blocks == 0) {
        type = C5Type::D;
    }
    if (!type) return none("switch-invariant data matches no type");

    std::set<std::vector<int>> tried;
    for (const auto& sym : dihedral5()) {
        ExpansionVector tau(5);
        for (int j = 0; j < 5; ++j) tau[j] = static_cast<int>(block[sym[j]].size());
        if (*type == C5Type::B && tau[4] < 2) continue;
        if (!tried.insert(tau).second) continue;
        if (auto v = match(phi, named::c5_type(*type, tau), c5_family(*type), tau, std::string(1, to_char(*type))))
            return *v;
    }
    return none(std::string("type ") + to_char(*type) + " data but no switching isomorphism to the normal form");
}

const std::vector<C5TableColumn>& c5_table_columns() {
    static const std::vector<C5TableColumn> columns{
        {1, {3, 3, 3, 2, 1}},          {2, {3, 3, 2, 2, 2}},          {3, {3, 4, 2, 2, 1}},
        {4, {3, 2, 4, 2, 1}},          {5, {4, 2, 2, 2, 2}},          {6, {5, 3, 1, 2, 1}},
        {7, {5, 2, 2, 2, 1}},          {8, {5, 1, 3, 2, 1}},          {9, {3, 1, 5, 2, 1}},
        {10, {kFree, 1, 2, 2, 1}},     {11, {kFree, kFree, 2, 1, 2}}, {12, {kFree, kFree, 1, 1, kFree}},
        {13, {kFree, 1, 1, kFree, kFree}}, {14, {kFree, 1, 1, 1, 1}},
    };
    return columns;
}

std::vector<int> c5_table_permitted(C5Type type) {
    switch (type) {
        case C5Type::A: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
        case C5Type::B:
        case C5Type::D: return {12, 13};
        default: return {14};
    }
}

std::vector<std::vector<int>> c5_table_symmetries(C5Type type) {
    switch (type) {
        case C5Type::A:
        case C5Type::C: return dihedral5();
        // fixes block 4
        case C5Type::B: return {{0, 1, 2, 3, 4}, {3, 2, 1, 0, 4}};
        // fixes the pair of blocks 4 and 0
        default: return {{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}};
    }
}

bool check_c5_table(const ExpansionVector& tau, C5Type type) {
    if (tau.size() != 5) return false;
    const auto& columns = c5_table_columns();
    for (const auto& sym : c5_table_symmetries(type)) {
        for (int index : c5_table_permitted(type)) {
            const auto& col = columns[static_cast<std::size_t>(index - 1)].sizes;
            bool dominated = true;
            for (int j = 0; j < 5 && dominated; ++j) dominated = tau[sym[j]] <= col[j];
            if (dominated) return true;
        }
    }
    return false;
}

bool kite_condition(const SignedDigraph& phi) {
    const int n = phi.order();
    const UnderlyingGraph g = phi.underlying();
    auto wrong = [] { return std::invalid_argument("kite_condition: wrong underlying shape"); };
    if (n < 5 || !is_connected(g)) throw wrong();

    int pendant = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            if (pendant >= 0) throw wrong();
            pendant = v;
        }
    }
    if (pendant < 0) throw wrong();
    const int anchor = g.neighbors(pendant)[0];
    auto is_clique = [&](const std::vector<int>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.adjacent(s[i], s[j])) return false;
        return true;
    };

    std::vector<int> structural;
    std::size_t expected_edges = 0;
    if (g.degree(anchor) == n - 1) {
        // (n-1,1)-kite: clique on everything but the pendant
        std::vector<int> clique;
        for (int v = 0; v < n; ++v)
            if (v != pendant) clique.push_back(v);
        if (!is_clique(clique)) throw wrong();
        for (int v : clique)
            if (v != anchor) structural.push_back(v);
        expected_edges = static_cast<std::size_t>((n - 1) * (n - 2) / 2 + 1);
    } else if (g.degree(anchor) == 2) {
        // (n-2,2)-kite: clique on everything but the pendant and its neighbour
        for (int v = 0; v < n; ++v)
            if (v != pendant && v != anchor) structural.push_back(v);
        if (!is_clique(structural)) throw wrong();
        expected_edges = static_cast<std::size_t>((n - 2) * (n - 3) / 2 + 2);
    } else {
        throw wrong();
    }
    if (g.size() != expected_edges) throw wrong();

    const Inertia in = inertia(phi);
    const bool spectral = in.positive == 2 && in.zero == 0;
    const bool clique_ok = clique_kind(phi, structural) != CliqueKind::Other;
    if (spectral != clique_ok) throw std::logic_error("kite_condition: inertia disagrees with the clique condition");
    return spectral;
}

ClassificationVerdict semicomplete_bridge_classify(const SignedDigraph& phi) {
    const UnderlyingGraph g = phi.underlying();
    const Reduction shape = reduce_pseudotwins(positive_signature(g));
    const UnderlyingGraph r = shape.reduced.underlying();
    auto wrong = [] { return std::invalid_argument("semicomplete_bridge_classify: wrong underlying shape"); };
    if (r.order() != 4 || r.size() != 3 || !is_connected(g)) throw wrong();

    std::vector<int> ends;
    for (int v = 0; v < 4; ++v) {
        if (r.degree(v) == 1) ends.push_back(v);
        else if (r.degree(v) != 2 || shape.blocks[v].size() != 1) throw wrong();
    }
    if (ends.size() != 2) throw wrong();
    // reduced vertices are the smallest members of their blocks, so ends[0] holds the smallest end vertex
    const int p = static_cast<int>(shape.blocks[ends[0]].size());
    const int q = static_cast<int>(shape.blocks[ends[1]].size());
    if (p < 2 || q < 2) throw wrong();

    const Inertia in = inertia(phi);
    if (in.positive != 2 || in.zero != 0) {
        return none("inertia (" + std::to_string(in.positive) + "," + std::to_string(in.zero) + "," +
                    std::to_string(in.negative) + ")");
    }
    if (auto v = match(phi, named::semicomplete(p, q), Family::SemicompleteG, {p, q}, "G")) return *v;
    if (auto v = match(phi, named::semicomplete_tilde(p, q), Family::SemicompleteTilde, {p, q}, "tilde")) return *v;
    if (auto v = match(phi, named::semicomplete_hat(p, q), Family::SemicompleteHat, {p, q}, "hat")) return *v;
    return none("inertia (2,0,n-2) but no semi-complete class matched");
}

}  // namespace eisenspec
