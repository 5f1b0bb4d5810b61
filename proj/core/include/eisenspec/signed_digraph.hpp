#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eisenspec/unit.hpp"

namespace eisenspec {

using Edge = std::pair<int, int>;

/// Simple loop-free graph on vertices 0..n-1.
class UnderlyingGraph {
public:
    UnderlyingGraph() = default;
    explicit UnderlyingGraph(int n);
    static UnderlyingGraph from_edges(int n, std::span<const Edge> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return m_; }
    [[nodiscard]] bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    [[nodiscard]] int degree(int u) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(u)].size()); }
    [[nodiscard]] const std::vector<int>& neighbors(int u) const { return nbrs_[static_cast<std::size_t>(u)]; }
    /// Edges (u,v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Idempotent; throws std::invalid_argument on loops or out-of-range vertices.
    void add_edge(int u, int v);

    friend bool operator==(const UnderlyingGraph& a, const UnderlyingGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    [[nodiscard]] std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> nbrs_;
};

/// Gain entry E_uv = omega^k as written in an edge list.
struct EdgeSpec {
    int u = 0;
    int v = 0;
    int k = 0;

    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Stored gain on the u < v orientation.
struct GainEntry {
    int u = 0;
    int v = 0;
    Unit gain;

    friend bool operator==(const GainEntry&, const GainEntry&) = default;
};

class SignedDigraph;

/// Mutable staging area for building a SignedDigraph. Writes keep the Hermitian pairing.
class DigraphBuilder {
public:
    explicit DigraphBuilder(int n);
    explicit DigraphBuilder(const SignedDigraph& start);

    [[nodiscard]] int order() const noexcept { return n_; }
    /// Sets E_uv = g (and E_vu = conj g), replacing any previous gain.
    DigraphBuilder& set(int u, int v, Unit g);
    DigraphBuilder& clear(int u, int v);
    [[nodiscard]] std::optional<Unit> gain(int u, int v) const;

    [[nodiscard]] SignedDigraph build() const;

private:
    void check(int u, int v) const;

    int n_;
    std::vector<std::int8_t> cells_;
};

/// A T6-gain graph: vertex count plus a Hermitian map of unit gains.
class SignedDigraph {
public:
    SignedDigraph() = default;
    /// Empty digraph (no edges) on n vertices.
    explicit SignedDigraph(int n);

    /// Entries (v,u,k) with v > u are stored as (u,v,-k). Throws std::invalid_argument on
    /// loops, out-of-range vertices and conflicting duplicates.
    static SignedDigraph from_edge_list(int n, std::span<const EdgeSpec> entries);
    static SignedDigraph from_edge_list(int n, std::initializer_list<EdgeSpec> entries) {
        return from_edge_list(n, std::span<const EdgeSpec>(entries.begin(), entries.size()));
    }

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return m_; }
    [[nodiscard]] bool adjacent(int u, int v) const { return cells_[index(u, v)] >= 0; }
    [[nodiscard]] std::optional<Unit> gain(int u, int v) const;
    /// -1 for a non-edge, otherwise the exponent of E_uv.
    [[nodiscard]] int code(int u, int v) const { return cells_[index(u, v)]; }
    [[nodiscard]] const std::vector<int>& neighbors(int u) const { return nbrs_[static_cast<std::size_t>(u)]; }
    [[nodiscard]] int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    /// Stored entries with u < v, sorted.
    [[nodiscard]] std::vector<GainEntry> entries() const;
    [[nodiscard]] UnderlyingGraph underlying() const;

    friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    friend class DigraphBuilder;
    SignedDigraph(int n, std::vector<std::int8_t> cells);

    [[nodiscard]] std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::int8_t> cells_;
    std::vector<std::vector<int>> nbrs_;
};

/// Cyclic vertex sequence with a fixed traversal direction.
struct VertexCycle {
    std::vector<int> vertices;
};

UnderlyingGraph underlying(const SignedDigraph& phi);

/// Induced subdigraph on `subset`, relabeled 0..|U|-1 in increasing original order.
SignedDigraph induced(const SignedDigraph& phi, std::span<const int> subset);
SignedDigraph disjoint_union(const SignedDigraph& a, const SignedDigraph& b);
SignedDigraph converse(const SignedDigraph& phi);
SignedDigraph negate(const SignedDigraph& phi);
/// Vertex v of phi becomes vertex mapping[v]; mapping must be a permutation.
SignedDigraph relabel(const SignedDigraph& phi, std::span<const int> mapping);
UnderlyingGraph relabel(const UnderlyingGraph& g, std::span<const int> mapping);
/// The all-positive-digon signed digraph on g.
SignedDigraph positive_signature(const UnderlyingGraph& g);

bool has_independent_triple(const UnderlyingGraph& g);
/// Component index per vertex, components numbered 0, 1, ... in order of their lowest vertex.
std::vector<int> connected_components(const UnderlyingGraph& g);
int component_count(const UnderlyingGraph& g);
bool is_connected(const UnderlyingGraph& g);
/// Sorted (descending) degree sequence.
std::vector<int> degree_sequence(const UnderlyingGraph& g);
UnderlyingGraph complement(const UnderlyingGraph& g);

// .sdg text format: "n <N>" then "<u> <v> <k>" lines, '#' comments.
SignedDigraph parse_sdg(std::istream& in);
SignedDigraph parse_sdg(const std::string& text);
SignedDigraph read_sdg_file(const std::string& path);
std::string to_sdg(const SignedDigraph& phi);

// graph6, one graph per line.
UnderlyingGraph parse_graph6(const std::string& line);
std::string to_graph6(const UnderlyingGraph& g);
std::vector<UnderlyingGraph> read_graph6_file(const std::string& path);

}  // namespace eisenspec
