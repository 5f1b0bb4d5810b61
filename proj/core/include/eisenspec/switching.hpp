#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisenspec/signed_digraph.hpp"

namespace eisenspec {

/// Diagonal switch X: vertex u is scaled by x[u].
struct SwitchingFunction {
    std::vector<Unit> x;

    static SwitchingFunction identity(int n) { return {std::vector<Unit>(static_cast<std::size_t>(n))}; }
    [[nodiscard]] int size() const { return static_cast<int>(x.size()); }
    friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

using SpanningForest = std::vector<Edge>;

struct TreeNormalForm {
    SpanningForest tree;
    SignedDigraph base;
    SwitchingFunction applied;
};

/// target = apply_switch(maybe_converse(relabel(source, bijection)), switching)
struct SwitchingIsomorphism {
    std::vector<int> bijection;
    SwitchingFunction switching;
    bool conjugated = false;
};

/// gain(u,v) -> x_u * gain(u,v) * x_v^-1.
SignedDigraph apply_switch(const SignedDigraph& phi, const SwitchingFunction& x);

/// BFS forest rooted at the lowest vertex of each component, neighbours in increasing order.
SpanningForest bfs_forest(const UnderlyingGraph& g);

/// Switches every tree edge to gain 1. Throws std::invalid_argument if `tree` is not a
/// spanning forest of the underlying graph.
TreeNormalForm normalize_tree(const SignedDigraph& phi, const std::optional<SpanningForest>& tree = std::nullopt);

/// Gain of the fundamental cycle of each non-tree edge (u,v), u < v, traversed u -> v first.
std::map<Edge, Unit> fundamental_cycle_gains(const SignedDigraph& phi, const SpanningForest& tree);

/// Witness X with apply_switch(a, X) == b, if one exists.
std::optional<SwitchingFunction> switching_equivalent_labeled(const SignedDigraph& a, const SignedDigraph& b);

std::optional<SwitchingIsomorphism> switching_isomorphic(const SignedDigraph& a, const SignedDigraph& b,
                                                         bool allow_converse = true);

SignedDigraph apply_isomorphism(const SignedDigraph& source, const SwitchingIsomorphism& witness);
bool verify_switching_isomorphism(const SignedDigraph& source, const SignedDigraph& target,
                                  const SwitchingIsomorphism& witness);

/// Plain isomorphism of signed digraphs (relabeling only).
bool isomorphic(const SignedDigraph& a, const SignedDigraph& b);

/// Complete invariant of the switching-isomorphism class (order <= 12).
/// Throws std::invalid_argument above the size limit.
std::string canonical_form(const SignedDigraph& phi, bool allow_converse = true);
inline constexpr int kCanonicalFormLimit = 12;

/// A digraph obtained from phi by a cut switch that is not isomorphic to phi; none for empty phi.
std::optional<SignedDigraph> find_nonisomorphic_switch_partner(const SignedDigraph& phi);

}  // namespace eisenspec
