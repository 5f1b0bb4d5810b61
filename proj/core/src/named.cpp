#include "eisenspec/named.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "eisenspec/expansions.hpp"

namespace eisenspec {

char to_char(C5Type t) { return static_cast<char>('A' + static_cast<int>(t)); }

C5Type c5_type_from_char(char c) {
    if (c < 'A' || c > 'D') throw std::invalid_argument(std::string("unknown C5 signature type '") + c + "'");
    return static_cast<C5Type>(c - 'A');
}

namespace named {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

SignedDigraph from_one_based(int n, std::initializer_list<EdgeSpec> one_based) {
    std::vector<EdgeSpec> e;
    for (EdgeSpec s : one_based) e.push_back({s.u - 1, s.v - 1, s.k});
    return SignedDigraph::from_edge_list(n, e);
}

SignedDigraph all_positive(int n, std::initializer_list<Edge> edges) {
    std::vector<EdgeSpec> e;
    for (auto [u, v] : edges) e.push_back({u, v, 0});
    return SignedDigraph::from_edge_list(n, e);
}

SignedDigraph complement_of(int n, std::initializer_list<Edge> edges) {
    return positive_signature(complement(UnderlyingGraph::from_edges(n, std::vector<Edge>(edges))));
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    require(used == s.size(), "expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

SignedDigraph complete(int n) {
    require(n >= 0, "K(n) needs n >= 0");
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.set(u, v, Unit::one());
    }
    return b.build();
}

SignedDigraph complete_star(int n) {
    require(n >= 2, "K_star(n) needs n >= 2");
    return DigraphBuilder(complete(n)).set(0, 1, Unit::omega()).build();
}

SignedDigraph complete_double_star(int n) {
    require(n >= 3, "K_double_star(n) needs n >= 3");
    return DigraphBuilder(complete(n)).set(0, 1, Unit::omega()).set(0, 2, Unit::omega()).build();
}

SignedDigraph complete_bipartite(int p, int q) {
    require(p >= 1 && q >= 1, "K_bipartite(p,q) needs p,q >= 1");
    DigraphBuilder b(p + q);
    for (int u = 0; u < p; ++u) {
        for (int v = p; v < p + q; ++v) b.set(u, v, Unit::one());
    }
    return b.build();
}

SignedDigraph empty(int n) {
    require(n >= 0, "O(n) needs n >= 0");
    return SignedDigraph(n);
}

SignedDigraph path(int n) {
    require(n >= 1, "P(n) needs n >= 1");
    DigraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.set(i, i + 1, Unit::one());
    return b.build();
}

SignedDigraph cycle(int n, Unit gain) {
    require(n >= 3, "C(n) needs n >= 3");
    return DigraphBuilder(path(n)).set(n - 1, 0, gain).build();
}

SignedDigraph transitive_tournament(int n, bool positive) {
    require(n >= 1, "transitive tournament needs n >= 1");
    DigraphBuilder b(n);
    const Unit g = positive ? Unit::omega() : Unit(4);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.set(u, v, g);
    }
    return b.build();
}

SignedDigraph t4(bool positive) { return transitive_tournament(4, positive); }

SignedDigraph gem() { return all_positive(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}); }

SignedDigraph three_pan() { return all_positive(4, {{0, 1}, {0, 2}, {2, 1}, {2, 3}}); }

SignedDigraph exceptional(int index) {
    switch (index) {
        case 1: return complement_of(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        case 2: return complement_of(7, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}});
        case 3: return complement_of(6, {{2, 1}, {4, 1}, {4, 5}, {2, 5}});
        case 4: return complement_of(6, {{0, 1}, {1, 2}, {2, 5}, {5, 4}});
        case 5: return all_positive(6, {{0, 1}, {0, 5}, {1, 5}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {5, 4}});
        case 6:
            return all_positive(7, {{0, 1}, {0, 5}, {0, 6}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                                    {4, 5}, {5, 6}});
        default: throw std::invalid_argument("exceptional graphs are G1..G6");
    }
}

SignedDigraph c5_type(C5Type type, const std::vector<int>& tau) {
    require(tau.size() == 5, "C5_type needs a 5-entry expansion vector");
    if (type == C5Type::B) require(tau[4] >= 2, "type B needs at least two vertices in the last block");
    DigraphBuilder b(clique_expand(cycle(5), tau));
    std::vector<int> start(6, 0);
    std::partial_sum(tau.begin(), tau.end(), start.begin() + 1);
    const Unit cross = type == C5Type::C ? Unit(4) : Unit::minus_one();
    for (int x = start[4]; x < start[5]; ++x) {
        for (int y = start[0]; y < start[1]; ++y) b.set(x, y, cross);
    }
    if (type == C5Type::B) b.set(start[4], start[4] + 1, Unit::omega());
    if (type == C5Type::D) b.set(start[4], start[0], Unit(4));
    return b.build();
}

SignedDigraph semicomplete(int p, int q) {
    require(p >= 1 && q >= 1, "semicomplete needs p,q >= 1");
    return clique_expand(path(4), {p, 1, 1, q});
}

SignedDigraph semicomplete_tilde(int p, int q) {
    require(p >= 2 && q >= 1, "SemiCompleteTilde needs p >= 2");
    return DigraphBuilder(semicomplete(p, q)).set(0, 1, Unit::omega()).build();
}

SignedDigraph semicomplete_hat(int p, int q) {
    require(p >= 1 && q >= 2, "SemiCompleteHat needs q >= 2");
    return DigraphBuilder(semicomplete(p, q)).set(p + 2, p + 3, Unit::omega()).build();
}

SignedDigraph kite(int a, int b) {
    require(a >= 1 && b >= 0, "Kite(a,b) needs a >= 1, b >= 0");
    DigraphBuilder out(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = u + 1; v < a; ++v) out.set(u, v, Unit::one());
    }
    for (int i = a - 1; i + 1 < a + b; ++i) out.set(i, i + 1, Unit::one());
    return out.build();
}

namespace {

const std::map<std::string, SignedDigraph (*)()>& exhibit_table() {
    static const std::map<std::string, SignedDigraph (*)()> table = {
        {"cycle_gain_pair_a",
         [] {
             return from_one_based(6, {{1, 2, 0}, {1, 5, 0}, {1, 6, 0}, {2, 3, 3}, {2, 4, 0}, {3, 4, 0}, {5, 4, 1}, {5, 6, 0}});
         }},
        {"cycle_gain_pair_b",
         [] {
             return from_one_based(6, {{1, 2, 0}, {1, 5, 0}, {1, 6, 1}, {2, 4, 0}, {3, 2, 4}, {3, 4, 0}, {5, 4, 1}, {5, 6, 0}});
         }},
        {"tree_coincident_pair_a",
         [] {
             return from_one_based(6, {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 6, 0}, {2, 5, 0}, {1, 6, 3}});
         }},
        {"tree_coincident_pair_b",
         [] {
             return from_one_based(6, {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 6, 0}, {2, 5, 3}, {1, 6, 3}});
         }},
        {"c4_analogue_pair_a",
         [] {
             DigraphBuilder b(9);
             for (int u = 0; u < 7; ++u) {
                 for (int v = u + 1; v < 7; ++v) b.set(u, v, Unit::one());
             }
             for (int u = 0; u < 3; ++u) b.set(u, 7, Unit::omega());
             for (int u = 3; u < 7; ++u) b.set(u, 7, Unit::one());
             b.set(7, 8, Unit::one());
             return b.build();
         }},
        {"c4_analogue_pair_b",
         [] {
             DigraphBuilder b(9);
             for (int u = 0; u < 6; ++u) {
                 for (int v = u + 1; v < 6; ++v) b.set(u, v, Unit::one());
                 b.set(u, 6, Unit::omega());
                 b.set(u, 8, Unit::one());
             }
             b.set(6, 7, Unit::one());
             b.set(7, 8, Unit::one());
             return b.build();
         }},
        {"symmetric_spectrum_example",
         [] {
             return from_one_based(11, {{1, 3, 4}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {3, 5, 0}, {7, 5, 4},
                                        {6, 7, 0}, {5, 6, 0}, {7, 8, 0}, {7, 9, 0}, {7, 10, 0}, {7, 11, 0}});
         }},
        {"zero_lambda3_a",
         [] {
             return from_one_based(7, {{1, 2, 0}, {1, 3, 0}, {1, 4, 0}, {2, 3, 1}, {2, 4, 0}, {3, 4, 0}, {5, 6, 0},
                                       {5, 7, 0}, {6, 7, 0}, {3, 7, 0}});
         }},
        {"zero_lambda3_b",
         [] {
             return from_one_based(6, {{1, 2, 1}, {1, 3, 0}, {2, 3, 0}, {4, 5, 1}, {4, 6, 0}, {5, 6, 0}, {3, 6, 0}});
         }},
        {"zero_lambda3_c5_a",
         [] {
             return from_one_based(7, {{1, 2, 0}, {1, 3, 0}, {2, 3, 1}, {2, 4, 0}, {3, 4, 0}, {4, 5, 0}, {4, 6, 0},
                                       {5, 6, 1}, {5, 7, 0}, {6, 7, 0}, {7, 1, 3}});
         }},
        {"zero_lambda3_c5_b",
         [] {
             return from_one_based(6, {{1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {3, 5, 0}, {4, 5, 1}, {4, 6, 0}, {5, 6, 0},
                                       {6, 1, 4}});
         }},
    };
    return table;
}

}  // namespace

SignedDigraph exhibit(const std::string& name) {
    const auto& table = exhibit_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown exhibit '" + name + "'");
    return it->second();
}

std::vector<std::string> exhibit_names() {
    std::vector<std::string> out;
    for (const auto& [name, make] : exhibit_table()) out.push_back(name);
    return out;
}

std::vector<std::string> constructor_names() {
    std::vector<std::string> out = {"K",  "K_star", "K_double_star", "K_bipartite", "O",  "P",  "C",
                                    "T4", "Gem",    "ThreePan",      "G1",          "G2", "G3", "G4",
                                    "G5", "G6",     "C5_type",       "SemiComplete", "SemiCompleteTilde",
                                    "SemiCompleteHat", "Kite"};
    for (const auto& e : exhibit_names()) out.push_back(e);
    return out;
}

SignedDigraph by_name(const std::string& name, const std::vector<std::string>& params) {
    auto arity = [&](std::size_t k) {
        require(params.size() == k, name + " expects " + std::to_string(k) + " parameter(s)");
    };
    auto i = [&](std::size_t idx) { return parse_int(params[idx]); };

    if (name == "K") return arity(1), complete(i(0));
    if (name == "K_star") return arity(1), complete_star(i(0));
    if (name == "K_double_star") return arity(1), complete_double_star(i(0));
    if (name == "K_bipartite") return arity(2), complete_bipartite(i(0), i(1));
    if (name == "O") return arity(1), empty(i(0));
    if (name == "P") return arity(1), path(i(0));
    if (name == "C") {
        require(params.size() == 1 || params.size() == 2, "C expects n and an optional gain exponent");
        return cycle(i(0), params.size() == 2 ? Unit(i(1)) : Unit::one());
    }
    if (name == "T4") {
        arity(1);
        require(params[0] == "+" || params[0] == "-", "T4 expects '+' or '-'");
        return t4(params[0] == "+");
    }
    if (name == "Gem") return arity(0), gem();
    if (name == "ThreePan") return arity(0), three_pan();
    if (name.size() == 2 && name[0] == 'G' && name[1] >= '1' && name[1] <= '6') return arity(0), exceptional(name[1] - '0');
    if (name == "C5_type") {
        arity(2);
        require(params[0].size() == 1, "C5_type expects a type letter A-D");
        return c5_type(c5_type_from_char(params[0][0]), parse_expansion_vector(params[1]));
    }
    if (name == "SemiComplete") return arity(2), semicomplete(i(0), i(1));
    if (name == "SemiCompleteTilde") return arity(2), semicomplete_tilde(i(0), i(1));
    if (name == "SemiCompleteHat") return arity(2), semicomplete_hat(i(0), i(1));
    if (name == "Kite") return arity(2), kite(i(0), i(1));
    if (exhibit_table().contains(name)) return arity(0), exhibit(name);
    throw std::invalid_argument("unknown constructor '" + name + "'");
}

}  // namespace named

}  // namespace eisenspec
