#pragma once

#include <functional>
#include <vector>

#include "eisenspec/polynomial.hpp"
#include "eisenspec/signed_digraph.hpp"

namespace eisenspec {

/// Vertex-disjoint union of edges and cycles. Each cycle is listed once, starting at its
/// smallest vertex with the second vertex smaller than the last.
struct ElementarySubgraph {
    std::vector<Edge> edges;
    std::vector<VertexCycle> cycles;

    [[nodiscard]] int vertex_count() const;
    [[nodiscard]] int component_count() const { return static_cast<int>(edges.size() + cycles.size()); }
};

struct CycleStats {
    int cycles = 0;
    int negative = 0;
    int non_real = 0;
};

CycleStats cycle_stats(const SignedDigraph& phi, const ElementarySubgraph& h);

/// Every elementary subgraph of G on exactly j vertices.
std::vector<ElementarySubgraph> enumerate_elementary(const UnderlyingGraph& g, int j);

/// Visits every elementary subgraph of G (all sizes) without materializing the list.
void for_each_elementary(const UnderlyingGraph& g, const std::function<void(const ElementarySubgraph&)>& visit);

/// Coefficients from the elementary-subgraph expansion. Refuses orders above 12 unless forced.
IntPolynomial char_poly_sachs(const SignedDigraph& phi, bool force = false);

}  // namespace eisenspec
