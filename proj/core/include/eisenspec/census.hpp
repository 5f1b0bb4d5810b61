#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eisenspec/polynomial.hpp"
#include "eisenspec/signed_digraph.hpp"
#include "eisenspec/switching.hpp"

namespace eisenspec {

/// Largest order served by the built-in graph enumerator.
inline constexpr int kBuiltinGraphLimit = 8;

/// Every graph on n vertices up to isomorphism, in canonical labeling, sorted by graph6.
/// Throws std::invalid_argument above kBuiltinGraphLimit.
const std::vector<UnderlyingGraph>& all_graphs(int n);
std::vector<UnderlyingGraph> connected_graphs(int n);

/// Iterates the tree-normalized signatures of a graph: gains on the BFS forest are fixed to 1 and
/// the 6^(m - n + c) assignments on the remaining edges are visited in lexicographic order.
class SignatureEnumerator {
public:
    explicit SignatureEnumerator(UnderlyingGraph g);

    /// Number of signatures, or nullopt if it does not fit in 64 bits.
    [[nodiscard]] std::optional<std::uint64_t> count() const;
    [[nodiscard]] const SpanningForest& tree() const { return tree_; }
    [[nodiscard]] const std::vector<Edge>& free_edges() const { return free_; }

    std::optional<SignedDigraph> next();

private:
    UnderlyingGraph graph_;
    SpanningForest tree_;
    std::vector<Edge> free_;
    std::vector<int> digits_;
    bool done_ = false;
};

std::vector<SignedDigraph> enumerate_signatures(const UnderlyingGraph& g);

struct CensusTask {
    int n = 0;
    IntPolynomial target_charpoly;
    /// External graph list; the built-in enumerator is used when empty.
    std::optional<std::vector<UnderlyingGraph>> graphs;
    bool allow_disconnected = true;
    /// Edge-count, triangle-trace and interlacing filters; disable for a brute-force reference run.
    bool prune = true;
    /// 0 selects EISENSPEC_THREADS, then the hardware concurrency.
    int threads = 0;

    static CensusTask for_target(const SignedDigraph& phi);
    /// m = -a_2.
    [[nodiscard]] long edge_count() const;
    /// tr(E^3) = -3 a_3.
    [[nodiscard]] long triangle_trace() const;
};

enum class DesVerdict { Des, NotDes, ScopeLimited };
std::string to_string(DesVerdict v);

struct CensusClass {
    /// Set for orders up to kCanonicalFormLimit.
    std::optional<std::string> canonical;
    SignedDigraph representative;
};

struct CensusCounters {
    std::uint64_t graphs = 0;
    std::uint64_t graphs_scanned = 0;
    std::uint64_t signatures = 0;
    std::uint64_t pruned = 0;
    std::uint64_t matches = 0;

    friend bool operator==(const CensusCounters&, const CensusCounters&) = default;
};

struct CensusReport {
    std::vector<CensusClass> classes;
    DesVerdict des_verdict = DesVerdict::ScopeLimited;
    CensusCounters scanned;
    bool external_source = false;
};

/// Throws std::invalid_argument if the order exceeds the built-in source and no list is given.
CensusReport cospectral_mates(const CensusTask& task);

CensusReport is_des(const SignedDigraph& phi, std::optional<std::vector<UnderlyingGraph>> graphs = std::nullopt,
                    int threads = 0);

enum class KnownFamily { SmallK3K3Star, SmallK3StarT4, SmallK3T4, Family65, Family66 };
std::string to_string(KnownFamily f);
KnownFamily known_family_from_string(const std::string& s);

/// Cospectral pair of twin expansions. Throws std::invalid_argument on a parameter below 1 or
/// one that produces an empty block.
std::pair<SignedDigraph, SignedDigraph> known_family(KnownFamily id, int param = 1);

struct MateTriple {
    int p = 0;
    int q = 0;
    int r = 0;

    friend bool operator==(const MateTriple&, const MateTriple&) = default;
};

/// All K_{p,q} plus r isolated vertices cospectral to K_{f,g}.
std::vector<MateTriple> rank2_mate_solver(int f, int g);

}  // namespace eisenspec
