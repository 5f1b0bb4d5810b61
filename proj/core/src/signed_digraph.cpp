#include "eisenspec/signed_digraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eisenspec {

namespace {

void check_vertex(int n, int u) {
    if (u < 0 || u >= n) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " out of range for order " + std::to_string(n));
    }
}

void check_permutation(std::span<const int> mapping, int n) {
    if (static_cast<int>(mapping.size()) != n) throw std::invalid_argument("relabeling has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int t : mapping) {
        check_vertex(n, t);
        if (seen[static_cast<std::size_t>(t)]++) throw std::invalid_argument("relabeling is not a bijection");
    }
}

}  // namespace

// ---------------------------------------------------------------- UnderlyingGraph

UnderlyingGraph::UnderlyingGraph(int n)
    : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0), nbrs_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative order");
}

UnderlyingGraph UnderlyingGraph::from_edges(int n, std::span<const Edge> edges) {
    UnderlyingGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void UnderlyingGraph::add_edge(int u, int v) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw std::invalid_argument("self-loop");
    if (adj_[index(u, v)]) return;
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    auto insert_sorted = [](std::vector<int>& list, int x) { list.insert(std::upper_bound(list.begin(), list.end(), x), x); };
    insert_sorted(nbrs_[static_cast<std::size_t>(u)], v);
    insert_sorted(nbrs_[static_cast<std::size_t>(v)], u);
    ++m_;
}

std::vector<Edge> UnderlyingGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------- DigraphBuilder

DigraphBuilder::DigraphBuilder(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative order");
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
}

DigraphBuilder::DigraphBuilder(const SignedDigraph& start) : n_(start.n_), cells_(start.cells_) {}

void DigraphBuilder::check(int u, int v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

DigraphBuilder& DigraphBuilder::set(int u, int v, Unit g) {
    check(u, v);
    const auto n = static_cast<std::size_t>(n_);
    cells_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = static_cast<std::int8_t>(g.exponent());
    cells_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = static_cast<std::int8_t>(g.conj().exponent());
    return *this;
}

DigraphBuilder& DigraphBuilder::clear(int u, int v) {
    check(u, v);
    const auto n = static_cast<std::size_t>(n_);
    cells_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = -1;
    cells_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = -1;
    return *this;
}

std::optional<Unit> DigraphBuilder::gain(int u, int v) const {
    check(u, v);
    const std::int8_t c = cells_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    if (c < 0) return std::nullopt;
    return Unit(c);
}

SignedDigraph DigraphBuilder::build() const { return SignedDigraph(n_, cells_); }

// ---------------------------------------------------------------- SignedDigraph

SignedDigraph::SignedDigraph(int n) : SignedDigraph(DigraphBuilder(n).build()) {}

SignedDigraph::SignedDigraph(int n, std::vector<std::int8_t> cells) : n_(n), cells_(std::move(cells)) {
    nbrs_.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (cells_[index(u, v)] >= 0) {
                nbrs_[static_cast<std::size_t>(u)].push_back(v);
                if (u < v) ++m_;
            }
        }
    }
}

SignedDigraph SignedDigraph::from_edge_list(int n, std::span<const EdgeSpec> entries) {
    DigraphBuilder b(n);
    for (const EdgeSpec& e : entries) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        const Unit g(e.k);
        if (auto prior = b.gain(e.u, e.v); prior && *prior != g) {
            throw std::invalid_argument("conflicting gains on pair (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        b.set(e.u, e.v, g);
    }
    return b.build();
}

std::optional<Unit> SignedDigraph::gain(int u, int v) const {
    const std::int8_t c = cells_[index(u, v)];
    if (c < 0) return std::nullopt;
    return Unit(c);
}

std::vector<GainEntry> SignedDigraph::entries() const {
    std::vector<GainEntry> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.push_back({u, v, Unit(code(u, v))});
        }
    }
    return out;
}

UnderlyingGraph SignedDigraph::underlying() const {
    UnderlyingGraph g(n_);
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u)) {
            if (u < v) g.add_edge(u, v);
        }
    }
    return g;
}

// ---------------------------------------------------------------- free functions

UnderlyingGraph underlying(const SignedDigraph& phi) { return phi.underlying(); }

SignedDigraph induced(const SignedDigraph& phi, std::span<const int> subset) {
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("induced: repeated vertex");
    }
    for (int v : sorted) check_vertex(phi.order(), v);
    const int k = static_cast<int>(sorted.size());
    DigraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (auto g = phi.gain(sorted[static_cast<std::size_t>(i)], sorted[static_cast<std::size_t>(j)])) b.set(i, j, *g);
        }
    }
    return b.build();
}

SignedDigraph disjoint_union(const SignedDigraph& a, const SignedDigraph& b) {
    DigraphBuilder out(a.order() + b.order());
    for (const GainEntry& e : a.entries()) out.set(e.u, e.v, e.gain);
    for (const GainEntry& e : b.entries()) out.set(e.u + a.order(), e.v + a.order(), e.gain);
    return out.build();
}

SignedDigraph converse(const SignedDigraph& phi) {
    DigraphBuilder b(phi.order());
    for (const GainEntry& e : phi.entries()) b.set(e.u, e.v, e.gain.conj());
    return b.build();
}

SignedDigraph negate(const SignedDigraph& phi) {
    DigraphBuilder b(phi.order());
    for (const GainEntry& e : phi.entries()) b.set(e.u, e.v, e.gain * Unit::minus_one());
    return b.build();
}

SignedDigraph relabel(const SignedDigraph& phi, std::span<const int> mapping) {
    check_permutation(mapping, phi.order());
    DigraphBuilder b(phi.order());
    for (const GainEntry& e : phi.entries()) {
        b.set(mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)], e.gain);
    }
    return b.build();
}

UnderlyingGraph relabel(const UnderlyingGraph& g, std::span<const int> mapping) {
    check_permutation(mapping, g.order());
    UnderlyingGraph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)]);
    return out;
}

SignedDigraph positive_signature(const UnderlyingGraph& g) {
    DigraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.set(u, v, Unit::one());
    return b.build();
}

bool has_independent_triple(const UnderlyingGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) && !g.adjacent(b, c)) return true;
            }
        }
    }
    return false;
}

std::vector<int> connected_components(const UnderlyingGraph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

int component_count(const UnderlyingGraph& g) {
    const auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const UnderlyingGraph& g) { return component_count(g) <= 1; }

std::vector<int> degree_sequence(const UnderlyingGraph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) d.push_back(g.degree(u));
    std::sort(d.rbegin(), d.rend());
    return d;
}

UnderlyingGraph complement(const UnderlyingGraph& g) {
    UnderlyingGraph out(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------- .sdg

SignedDigraph parse_sdg(std::istream& in) {
    std::string line;
    int n = -1;
    int line_no = 0;
    std::vector<EdgeSpec> entries;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto fail = [&](const std::string& what) {
            return std::invalid_argument("sdg line " + std::to_string(line_no) + ": " + what);
        };
        if (n < 0) {
            if (first != "n" || !(ls >> n) || n < 0) throw fail("expected header 'n <N>'");
            continue;
        }
        EdgeSpec e;
        try {
            e.u = std::stoi(first);
        } catch (const std::exception&) {
            throw fail("expected '<u> <v> <k>'");
        }
        if (!(ls >> e.v >> e.k)) throw fail("expected '<u> <v> <k>'");
        std::string extra;
        if (ls >> extra) throw fail("trailing tokens");
        entries.push_back(e);
    }
    if (n < 0) throw std::invalid_argument("sdg: missing header 'n <N>'");
    return SignedDigraph::from_edge_list(n, entries);
}

SignedDigraph parse_sdg(const std::string& text) {
    std::istringstream in(text);
    return parse_sdg(in);
}

SignedDigraph read_sdg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_sdg(in);
}

std::string to_sdg(const SignedDigraph& phi) {
    std::ostringstream os;
    os << "n " << phi.order() << '\n';
    for (const GainEntry& e : phi.entries()) os << e.u << ' ' << e.v << ' ' << e.gain.exponent() << '\n';
    return os.str();
}

// ---------------------------------------------------------------- graph6

UnderlyingGraph parse_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    for (char ch : line) {
        if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: invalid character");
    }
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("graph6: truncated");
        return line[pos++] - 63;
    };
    long n = next();
    if (n == 63) {
        n = 0;
        int width = 3;
        if (pos < line.size() && line[pos] == '~') {
            ++pos;
            width = 6;
        }
        for (int i = 0; i < width; ++i) n = (n << 6) | next();
    }
    if (n > 100000) throw std::invalid_argument("graph6: order too large");
    UnderlyingGraph g(static_cast<int>(n));
    int bit = 6;
    int chunk = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 6) {
                chunk = next();
                bit = 0;
            }
            if ((chunk >> (5 - bit)) & 1) g.add_edge(u, v);
            ++bit;
        }
    }
    if (pos != line.size()) throw std::invalid_argument("graph6: trailing data");
    return g;
}

std::string to_graph6(const UnderlyingGraph& g) {
    std::string out;
    const long n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int chunk = 0;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                bit = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((chunk << (6 - bit)) + 63));
    return out;
}

std::vector<UnderlyingGraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<UnderlyingGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace eisenspec
