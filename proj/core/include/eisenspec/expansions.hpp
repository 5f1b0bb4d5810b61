#pragma once

#include <string>
#include <vector>

#include "eisenspec/signed_digraph.hpp"

namespace eisenspec {

/// Block sizes, one per base vertex; every entry >= 1.
using ExpansionVector = std::vector<int>;

/// Vertex j becomes an independent block of tau_j vertices; blocks are consecutive.
SignedDigraph twin_expand(const SignedDigraph& phi, const ExpansionVector& tau);
/// Vertex j becomes a positive clique of tau_j vertices; blocks are consecutive.
SignedDigraph clique_expand(const SignedDigraph& phi, const ExpansionVector& tau);

/// Non-adjacent with row_u = c * row_v off {u,v} for some unit c.
bool are_twins(const SignedDigraph& phi, int u, int v);
/// Adjacent with row_u = E_uv * row_v off {u,v}.
bool are_pseudotwins(const SignedDigraph& phi, int u, int v);

std::vector<Edge> find_twins(const SignedDigraph& phi);
std::vector<Edge> find_pseudotwins(const SignedDigraph& phi);

/// Equivalence classes of the (pseudo)twin relation, each sorted, ordered by smallest member.
std::vector<std::vector<int>> twin_classes(const SignedDigraph& phi);
std::vector<std::vector<int>> pseudotwin_classes(const SignedDigraph& phi);

struct Reduction {
    SignedDigraph reduced;
    /// blocks[i] = original vertices collapsed onto reduced vertex i (its smallest member).
    std::vector<std::vector<int>> blocks;
};

Reduction reduce_twins(const SignedDigraph& phi);
Reduction reduce_pseudotwins(const SignedDigraph& phi);
SignedDigraph twin_reduce(const SignedDigraph& phi);
SignedDigraph clique_reduce(const SignedDigraph& phi);

/// Parses "3,5,16".
ExpansionVector parse_expansion_vector(const std::string& text);

}  // namespace eisenspec
