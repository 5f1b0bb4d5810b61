#pragma once

#include <functional>
#include <span>
#include <vector>

#include "eisenspec/signed_digraph.hpp"

namespace eisenspec {

/// Visitor receives mapping[g_vertex] = h_vertex; returning false stops the search.
using IsomorphismVisitor = std::function<bool(std::span<const int>)>;

/// Enumerates every isomorphism G -> H by backtracking over colour-refined cells.
/// Optional vertex colours must be preserved. Returns false if the visitor stopped early.
bool for_each_isomorphism(const UnderlyingGraph& g, const UnderlyingGraph& h, const IsomorphismVisitor& visit,
                          std::span<const int> g_colors = {}, std::span<const int> h_colors = {});

/// All isomorphisms G -> H (collects; keep for small automorphism groups).
std::vector<std::vector<int>> graph_isomorphisms(const UnderlyingGraph& g, const UnderlyingGraph& h);

/// Stable colour refinement (1-dimensional Weisfeiler-Leman) of a single graph.
/// Colour values depend only on the isomorphism type, so they are comparable across graphs.
std::vector<int> refine_colors(const UnderlyingGraph& g, std::span<const int> initial = {});

/// Canonical labeling: mapping[v] = canonical position of v. Isomorphic graphs yield
/// identical relabeled graphs.
std::vector<int> canonical_labeling(const UnderlyingGraph& g);
UnderlyingGraph canonical_graph(const UnderlyingGraph& g);

}  // namespace eisenspec
