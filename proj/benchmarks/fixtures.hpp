#pragma once

#include <random>

#include "eisenspec/signed_digraph.hpp"

namespace bench {

inline eisenspec::SignedDigraph random_digraph(int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::uniform_int_distribution<int> gain(0, 5);
    eisenspec::DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.set(u, v, eisenspec::Unit(gain(rng)));
    return b.build();
}

}  // namespace bench
