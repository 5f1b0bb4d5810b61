#include "eisenspec/sachs.hpp"

#include <stdexcept>

#include "eisenspec/spectra.hpp"

namespace eisenspec {

int ElementarySubgraph::vertex_count() const {
    int total = 2 * static_cast<int>(edges.size());
    for (const VertexCycle& c : cycles) total += static_cast<int>(c.vertices.size());
    return total;
}

CycleStats cycle_stats(const SignedDigraph& phi, const ElementarySubgraph& h) {
    CycleStats s;
    for (const VertexCycle& c : h.cycles) {
        const Unit g = cycle_gain(phi, c);
        ++s.cycles;
        if (g.twice_real_part() < 0) ++s.negative;
        if (!g.is_real()) ++s.non_real;
    }
    return s;
}

namespace {

class ElementaryWalker {
public:
    ElementaryWalker(const UnderlyingGraph& g, const std::function<void(const ElementarySubgraph&)>& visit)
        : g_(g), visit_(visit), used_(static_cast<std::size_t>(g.order()), 0) {}

    void run() { step(0); }

private:
    void step(int v) {
        const int n = g_.order();
        while (v < n && used_[v]) ++v;
        if (v == n) {
            visit_(current_);
            return;
        }
        // v left uncovered
        step(v + 1);
        used_[v] = 1;
        for (int w : g_.neighbors(v)) {
            if (w < v || used_[w]) continue;
            used_[w] = 1;
            current_.edges.emplace_back(v, w);
            step(v + 1);
            current_.edges.pop_back();
            used_[w] = 0;
        }
        // cycles whose smallest vertex is v
        std::vector<int> path{v};
        extend_cycle(v, path);
        used_[v] = 0;
    }

    void extend_cycle(int start, std::vector<int>& path) {
        const int tail = path.back();
        for (int w : g_.neighbors(tail)) {
            if (w <= start || used_[w]) continue;
            path.push_back(w);
            used_[w] = 1;
            if (path.size() >= 3 && g_.adjacent(w, start) && path[1] < w) {
                current_.cycles.push_back(VertexCycle{path});
                step(start + 1);
                current_.cycles.pop_back();
            }
            extend_cycle(start, path);
            used_[w] = 0;
            path.pop_back();
        }
    }

    const UnderlyingGraph& g_;
    const std::function<void(const ElementarySubgraph&)>& visit_;
    std::vector<char> used_;
    ElementarySubgraph current_;
};

}  // namespace

void for_each_elementary(const UnderlyingGraph& g, const std::function<void(const ElementarySubgraph&)>& visit) {
    ElementaryWalker(g, visit).run();
}

std::vector<ElementarySubgraph> enumerate_elementary(const UnderlyingGraph& g, int j) {
    if (j < 0 || j > g.order()) throw std::invalid_argument("enumerate_elementary: j out of range");
    std::vector<ElementarySubgraph> out;
    for_each_elementary(g, [&](const ElementarySubgraph& h) {
        if (h.vertex_count() == j) out.push_back(h);
    });
    return out;
}

IntPolynomial char_poly_sachs(const SignedDigraph& phi, bool force) {
    const int n = phi.order();
    if (n > 12 && !force) throw std::invalid_argument("char_poly_sachs: order above 12 needs force");
    std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1, 0);
    for_each_elementary(phi.underlying(), [&](const ElementarySubgraph& h) {
        const CycleStats s = cycle_stats(phi, h);
        const int exponent = h.component_count() + s.negative;
        mpz_class term = 1;
        term <<= static_cast<unsigned>(s.cycles - s.non_real);
        if (exponent % 2 != 0) term = -term;
        a[static_cast<std::size_t>(h.vertex_count())] += term;
    });
    return IntPolynomial(std::move(a));
}

}  // namespace eisenspec
