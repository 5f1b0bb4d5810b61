#include "random_digraphs.hpp"

#include <vector>

namespace oracle {

using eisenspec::DigraphBuilder;
using eisenspec::SignedDigraph;
using eisenspec::Unit;

namespace {

Unit random_unit(Rng& rng) { return Unit(std::uniform_int_distribution<int>(0, 5)(rng)); }

}  // namespace

SignedDigraph random_digraph(Rng& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.set(u, v, random_unit(rng));
    return b.build();
}

SignedDigraph random_connected_digraph(Rng& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    DigraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.set(std::uniform_int_distribution<int>(0, v - 1)(rng), v, random_unit(rng));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!b.gain(u, v) && coin(rng)) b.set(u, v, random_unit(rng));
    return b.build();
}

SignedDigraph random_bipartite_digraph(Rng& rng, int p, int q, double density) {
    std::bernoulli_distribution coin(density);
    DigraphBuilder b(p + q);
    for (int u = 0; u < p; ++u)
        for (int v = p; v < p + q; ++v)
            if (coin(rng)) b.set(u, v, random_unit(rng));
    return b.build();
}

SignedDigraph random_signature(Rng& rng, const eisenspec::UnderlyingGraph& g) {
    DigraphBuilder b(g.order());
    for (const auto& [u, v] : g.edges()) b.set(u, v, random_unit(rng));
    return b.build();
}

}  // namespace oracle
