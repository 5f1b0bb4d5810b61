#pragma once

#include <string>
#include <vector>

#include "eisenspec/signed_digraph.hpp"

namespace eisenspec {

enum class C5Type { A, B, C, D };

char to_char(C5Type t);
C5Type c5_type_from_char(char c);

namespace named {

SignedDigraph complete(int n);
/// K_n with the pair (0,1) oriented: E_01 = omega.
SignedDigraph complete_star(int n);
/// K_n with omega-arcs 0->1 and 0->2.
SignedDigraph complete_double_star(int n);
SignedDigraph complete_bipartite(int p, int q);
SignedDigraph empty(int n);
/// Edges (i, i+1).
SignedDigraph path(int n);
/// Edges (i, i+1) and (n-1, 0); the closing entry E_{n-1,0} carries `gain`, so the
/// cycle 0 -> 1 -> ... -> n-1 -> 0 has that gain.
SignedDigraph cycle(int n, Unit gain = Unit::one());
/// Transitive tournament on four vertices: arcs u -> v (u < v) with gain omega, or -omega.
SignedDigraph transitive_tournament(int n, bool positive);
SignedDigraph t4(bool positive);
/// Hub 0 joined to the path 1-2-3-4.
SignedDigraph gem();
/// Triangle 0,1,2 with pendant 3 on vertex 2.
SignedDigraph three_pan();
/// Exceptional graphs G1..G6 (orders 7,7,6,6,6,7), all-positive.
SignedDigraph exceptional(int index);
/// CE(C5, tau) with the type's distinguished gains on blocks 4 and 0.
SignedDigraph c5_type(C5Type type, const std::vector<int>& tau);
/// CE(P4, [p,1,1,q]) all positive.
SignedDigraph semicomplete(int p, int q);
/// As semicomplete, with an omega-arc between the first two vertices of the p-block.
SignedDigraph semicomplete_tilde(int p, int q);
/// As semicomplete, with an omega-arc between the first two vertices of the q-block.
SignedDigraph semicomplete_hat(int p, int q);
/// Clique on 0..a-1 with a path a..a+b-1 attached to vertex a-1.
SignedDigraph kite(int a, int b);

/// Fixed labeled exhibits used in examples and tests (see `exhibit_names`).
SignedDigraph exhibit(const std::string& name);
std::vector<std::string> exhibit_names();

/// Dispatch by constructor name, e.g. ("K_star", {"5"}) or ("C5_type", {"A", "2,1,1,1,1"}).
/// Throws std::invalid_argument for unknown names or bad parameters.
SignedDigraph by_name(const std::string& name, const std::vector<std::string>& params);
std::vector<std::string> constructor_names();

}  // namespace named

}  // namespace eisenspec
