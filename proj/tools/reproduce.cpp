#include "reproduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eisenspec/eisenspec.hpp"

namespace eisenspec::cli {

namespace {

std::string half_units(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
    return "(" + out + ")";
}

std::string inertia_text(const Inertia& in) {
    return "(" + std::to_string(in.positive) + "," + std::to_string(in.zero) + "," + std::to_string(in.negative) + ")";
}

std::vector<ClaimResult> table2() {
    std::vector<ClaimResult> out;
    const std::pair<const char*, std::vector<int>> cases[] = {{"cycle_gain_pair_a", {-2, 1, 2}},
                                                              {"cycle_gain_pair_b", {-1, 1, 1}}};
    for (const auto& [name, expected] : cases) {
        const SignedDigraph phi = named::exhibit(name);
        std::vector<int> twice;
        for (const auto& [edge, gain] : fundamental_cycle_gains(phi, bfs_forest(phi.underlying())))
            twice.push_back(gain.twice_real_part());
        std::vector<std::string> shown;
        for (int t : twice) shown.push_back(half_units(t));
        std::sort(twice.begin(), twice.end());
        out.push_back({std::string(name) + " fundamental-cycle real parts", twice == expected, false, join(shown)});
    }
    return out;
}

std::vector<ClaimResult> example31() {
    const SignedDigraph a = named::exhibit("cycle_gain_pair_a");
    const SignedDigraph b = named::exhibit("cycle_gain_pair_b");
    const IntPolynomial expected{1, 0, -8, 0, 13, 0, -5};
    const IntPolynomial pa = char_poly_exact(a);
    const IntPolynomial pb = char_poly_exact(b);
    return {
        {"charpoly of a is x^6 - 8x^4 + 13x^2 - 5", pa == expected, false, pa.to_string()},
        {"charpoly of b is x^6 - 8x^4 + 13x^2 - 5", pb == expected, false, pb.to_string()},
        {"a and b are not switching isomorphic", !switching_isomorphic(a, b).has_value(), false, ""},
    };
}

std::vector<ClaimResult> lemma52() {
    std::vector<ClaimResult> out;
    for (int n = 3; n <= 10; ++n) {
        IntPolynomial closed{1, -(n - 3), -(2 * n - 3), -1};
        for (int i = 0; i < n - 3; ++i) closed = closed * IntPolynomial{1, 1};
        const IntPolynomial got = char_poly_exact(named::complete_star(n));
        out.push_back({"K_" + std::to_string(n) + "* closed form", got == closed, false, got.to_string()});
    }
    return out;
}

std::vector<ClaimResult> thm53() {
    std::vector<ClaimResult> out;
    for (int n = 4; n <= 5; ++n) {
        std::set<std::string> classes;
        for (const UnderlyingGraph& g : connected_graphs(n)) {
            SignatureEnumerator it(g);
            while (auto phi = it.next()) {
                const Inertia in = inertia(*phi);
                if (in.positive == 1 && in.zero == 0) classes.insert(canonical_form(*phi));
            }
        }
        const std::set<std::string> expected{canonical_form(named::complete(n)), canonical_form(named::complete_star(n))};
        out.push_back({"n=" + std::to_string(n) + ": one positive eigenvalue and no zero gives exactly K and K*",
                       classes == expected, false, std::to_string(classes.size()) + " classes"});
    }
    const Inertia kss = inertia(named::complete_double_star(5));
    out.push_back({"K_5** has inertia (1,1,3)", kss == Inertia{1, 1, 3}, false, inertia_text(kss)});
    return out;
}

bool two_and_rest_negative(const SignedDigraph& phi) {
    const Inertia in = inertia(phi);
    return in.positive == 2 && in.zero == 0;
}

std::string tau_text(const std::vector<int>& tau) {
    std::vector<std::string> parts;
    for (int t : tau) parts.push_back(std::to_string(t));
    return join(parts);
}

std::vector<ClaimResult> table3() {
    std::vector<ClaimResult> out;
    auto check_column = [&](C5Type type, const std::vector<int>& tau, const std::vector<bool>& free_slot,
                            const std::string& label) {
        const SignedDigraph phi = named::c5_type(type, tau);
        const Inertia in = inertia(phi);
        out.push_back({label + " " + tau_text(tau) + " has inertia (2,0,n-2)", two_and_rest_negative(phi), false,
                       inertia_text(in)});
        for (int j = 0; j < 5; ++j) {
            if (free_slot[j]) continue;
            std::vector<int> bigger = tau;
            ++bigger[j];
            if (check_c5_table(bigger, type)) continue;
            const Inertia bin = inertia(named::c5_type(type, bigger));
            out.push_back({label + " increment " + tau_text(bigger) + " fails", !(bin.positive == 2 && bin.zero == 0),
                           false, inertia_text(bin)});
        }
    };
    for (const C5TableColumn& col : c5_table_columns()) {
        if (col.index > 9) break;
        check_column(C5Type::A, col.sizes, std::vector<bool>(5, false), "A tau" + std::to_string(col.index));
    }
    for (int t1 : {1, 5, 9}) {
        check_column(C5Type::C, {t1, 1, 1, 1, 1}, {true, false, false, false, false}, "C tau14");
    }
    return out;
}

std::vector<ClaimResult> thm610(int threads) {
    std::vector<ClaimResult> out;
    const SignedDigraph c4_star = named::cycle(4, Unit(4));
    for (int n = 5; n <= 6; ++n) {
        const SignedDigraph phi = clique_expand(c4_star, {n - 3, 1, 1, 1});
        const CensusReport r = is_des(phi, std::nullopt, threads);
        out.push_back({"CE(C4*,[" + std::to_string(n - 3) + ",1,1,1]) is DES", r.des_verdict == DesVerdict::Des, false,
                       to_string(r.des_verdict) + ", " + std::to_string(r.classes.size()) + " classes"});
    }
    return out;
}

std::vector<ClaimResult> saltire(int threads) {
    const SignedDigraph star = named::complete_bipartite(1, 4);
    const SignedDigraph square = disjoint_union(named::complete_bipartite(2, 2), named::empty(1));
    const CensusReport r = is_des(star, std::nullopt, threads);
    std::set<std::string> found;
    for (const CensusClass& c : r.classes) found.insert(*c.canonical);
    const std::set<std::string> expected{canonical_form(star), canonical_form(square)};
    const auto mates = rank2_mate_solver(1, 4);
    const std::vector<MateTriple> expected_mates{{1, 4, 0}, {2, 2, 1}};
    return {
        {"K_{1,4} and K_{2,2} + K_1 are cospectral", char_poly_exact(star) == char_poly_exact(square), false, ""},
        {"census finds exactly these two classes", found == expected, false,
         std::to_string(r.classes.size()) + " classes"},
        {"rank-2 mate solver for (1,4) returns both", mates == expected_mates, false,
         std::to_string(mates.size()) + " triples"},
    };
}

std::vector<ClaimResult> families() {
    std::vector<ClaimResult> out;
    auto pair_claim = [&](KnownFamily id, int i) {
        const std::string label = to_string(id) + (id == KnownFamily::Family65 || id == KnownFamily::Family66
                                                       ? "(" + std::to_string(i) + ")"
                                                       : "");
        std::pair<SignedDigraph, SignedDigraph> pair;
        try {
            pair = known_family(id, i);
        } catch (const std::invalid_argument& e) {
            out.push_back({label + " cospectral pair", false, true, e.what()});
            return;
        }
        const auto& [a, b] = pair;
        const bool cospectral = char_poly_exact(a) == char_poly_exact(b);
        const bool distinct = !switching_isomorphic(a, b).has_value();
        out.push_back({label + " cospectral and not switching isomorphic", cospectral && distinct, false,
                       "order " + std::to_string(a.order()) + (cospectral ? "" : ", charpolys differ") +
                           (distinct ? "" : ", switching isomorphic")});
    };
    pair_claim(KnownFamily::SmallK3K3Star, 1);
    pair_claim(KnownFamily::SmallK3StarT4, 1);
    pair_claim(KnownFamily::SmallK3T4, 1);
    for (int i = 1; i <= 4; ++i) pair_claim(KnownFamily::Family65, i);
    for (int i = 1; i <= 4; ++i) pair_claim(KnownFamily::Family66, i);
    return out;
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
    static const std::vector<std::string> targets{"table2", "example31", "lemma52", "thm53",
                                                  "table3", "thm610",    "saltire", "families"};
    return targets;
}

std::vector<ClaimResult> reproduce(const std::string& target, int threads) {
    if (target == "table2") return table2();
    if (target == "example31") return example31();
    if (target == "lemma52") return lemma52();
    if (target == "thm53") return thm53();
    if (target == "table3") return table3();
    if (target == "thm610") return thm610(threads);
    if (target == "saltire") return saltire(threads);
    if (target == "families") return families();
    throw std::invalid_argument("unknown reproduction target: " + target);
}

}  // namespace eisenspec::cli
