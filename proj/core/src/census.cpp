#include "eisenspec/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "detail/modular.hpp"
#include "detail/small_charpoly.hpp"
#include "eisenspec/expansions.hpp"
#include "eisenspec/isomorphism.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/spectra.hpp"

namespace eisenspec {

// ---------------------------------------------------------------- graph source

namespace {

std::vector<UnderlyingGraph> extend_graphs(const std::vector<UnderlyingGraph>& smaller, int n) {
    std::map<std::string, UnderlyingGraph> seen;
    for (const UnderlyingGraph& h : smaller) {
        for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
            UnderlyingGraph g(n);
            for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
            for (int u = 0; u < n - 1; ++u)
                if (mask & (1U << u)) g.add_edge(u, n - 1);
            UnderlyingGraph canon = canonical_graph(g);
            seen.emplace(to_graph6(canon), std::move(canon));
        }
    }
    std::vector<UnderlyingGraph> out;
    out.reserve(seen.size());
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace

const std::vector<UnderlyingGraph>& all_graphs(int n) {
    if (n < 0 || n > kBuiltinGraphLimit)
        throw std::invalid_argument("all_graphs: built-in enumeration covers orders 0.." +
                                    std::to_string(kBuiltinGraphLimit));
    static std::mutex lock;
    static std::vector<std::vector<UnderlyingGraph>> cache{{UnderlyingGraph(0)}};
    std::lock_guard guard(lock);
    while (static_cast<int>(cache.size()) <= n) {
        const int next = static_cast<int>(cache.size());
        cache.push_back(extend_graphs(cache.back(), next));
    }
    return cache[static_cast<std::size_t>(n)];
}

std::vector<UnderlyingGraph> connected_graphs(int n) {
    std::vector<UnderlyingGraph> out;
    for (const UnderlyingGraph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------- signatures

SignatureEnumerator::SignatureEnumerator(UnderlyingGraph g) : graph_(std::move(g)), tree_(bfs_forest(graph_)) {
    std::set<Edge> in_tree(tree_.begin(), tree_.end());
    for (const Edge& e : graph_.edges())
        if (!in_tree.contains(e)) free_.push_back(e);
    digits_.assign(free_.size(), 0);
}

std::optional<std::uint64_t> SignatureEnumerator::count() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_.size(); ++i) {
        if (total > UINT64_MAX / 6) return std::nullopt;
        total *= 6;
    }
    return total;
}

std::optional<SignedDigraph> SignatureEnumerator::next() {
    if (done_) return std::nullopt;
    DigraphBuilder b(graph_.order());
    for (const auto& [u, v] : tree_) b.set(u, v, Unit::one());
    for (std::size_t i = 0; i < free_.size(); ++i) b.set(free_[i].first, free_[i].second, Unit(digits_[i]));
    SignedDigraph out = b.build();
    std::size_t i = free_.size();
    while (i > 0) {
        --i;
        if (++digits_[i] < 6) break;
        digits_[i] = 0;
        if (i == 0) done_ = true;
    }
    if (free_.empty()) done_ = true;
    return out;
}

std::vector<SignedDigraph> enumerate_signatures(const UnderlyingGraph& g) {
    SignatureEnumerator it(g);
    std::vector<SignedDigraph> out;
    while (auto phi = it.next()) out.push_back(std::move(*phi));
    return out;
}

// ---------------------------------------------------------------- census task

CensusTask CensusTask::for_target(const SignedDigraph& phi) {
    CensusTask t;
    t.n = phi.order();
    t.target_charpoly = char_poly_exact(phi);
    return t;
}

long CensusTask::edge_count() const { return -target_charpoly.coefficient_of(n - 2).get_si(); }

long CensusTask::triangle_trace() const { return -3 * target_charpoly.coefficient_of(n - 3).get_si(); }

std::string to_string(DesVerdict v) {
    switch (v) {
        case DesVerdict::Des: return "DES";
        case DesVerdict::NotDes: return "NOT_DES";
        default: return "SCOPE_LIMITED";
    }
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("EISENSPEC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

long triangle_count(const UnderlyingGraph& g) {
    long count = 0;
    for (const auto& [u, v] : g.edges())
        for (int w : g.neighbors(v))
            if (w > v && g.adjacent(u, w)) ++count;
    return count;
}

struct RankPrime {
    detail::u64 p;
    detail::u64 omega;
};

const RankPrime& rank_prime() {
    static const RankPrime value = [] {
        detail::u64 p = (1ULL << 61) + 1;
        p -= (p % 6) - 1;
        while (!detail::is_prime(p)) p -= 6;
        return RankPrime{p, detail::sixth_root(p)};
    }();
    return value;
}

// One graph relabeled in BFS order: vertex i has its tree parent below i.
struct SearchPlan {
    int n = 0;
    std::vector<int> original;  // original[i] = vertex of the source graph at position i
    std::vector<Edge> tree;
    std::vector<Edge> free;     // (a,b), a<b, sorted by (b,a)
    std::vector<std::vector<int>> check;  // decided vertex set after assigning free[e]
};

SearchPlan make_plan(const UnderlyingGraph& g) {
    SearchPlan plan;
    plan.n = g.order();
    const SpanningForest forest = bfs_forest(g);
    // BFS order consistent with the forest
    std::vector<std::vector<int>> tree_adj(static_cast<std::size_t>(plan.n));
    for (const auto& [u, v] : forest) {
        tree_adj[u].push_back(v);
        tree_adj[v].push_back(u);
    }
    std::vector<int> pos(static_cast<std::size_t>(plan.n), -1);
    for (int root = 0; root < plan.n; ++root) {
        if (pos[root] >= 0) continue;
        std::vector<int> queue{root};
        pos[root] = static_cast<int>(plan.original.size());
        plan.original.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto nbrs = tree_adj[queue[head]];
            std::sort(nbrs.begin(), nbrs.end());
            for (int v : nbrs) {
                if (pos[v] >= 0) continue;
                pos[v] = static_cast<int>(plan.original.size());
                plan.original.push_back(v);
                queue.push_back(v);
            }
        }
    }
    std::set<Edge> tree_set;
    for (const auto& [u, v] : forest) {
        const Edge e{std::min(pos[u], pos[v]), std::max(pos[u], pos[v])};
        plan.tree.push_back(e);
        tree_set.insert(e);
    }
    for (const auto& [u, v] : g.edges()) {
        const Edge e{std::min(pos[u], pos[v]), std::max(pos[u], pos[v])};
        if (!tree_set.contains(e)) plan.free.push_back(e);
    }
    std::sort(plan.free.begin(), plan.free.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.second, x.first) < std::tie(y.second, y.first); });
    for (std::size_t e = 0; e < plan.free.size(); ++e) {
        const auto [a, b] = plan.free[e];
        std::vector<char> pending(static_cast<std::size_t>(plan.n), 0);
        for (std::size_t f = e + 1; f < plan.free.size() && plan.free[f].second == b; ++f) pending[plan.free[f].first] = 1;
        std::vector<int> subset;
        for (int v = 0; v < b; ++v)
            if (!pending[v]) subset.push_back(v);
        subset.push_back(b);
        plan.check.push_back(std::move(subset));
    }
    return plan;
}

struct TargetData {
    int n = 0;
    std::vector<std::int64_t> coeffs;  // empty if a coefficient exceeds int64
    IntPolynomial poly;
    Inertia inertia;
    int rank = 0;
};

struct Hit {
    std::size_t unit = 0;
    SignedDigraph digraph;
};

class UnitSearch {
public:
    UnitSearch(const SearchPlan& plan, const TargetData& target, bool prune)
        : plan_(plan), target_(target), prune_(prune),
          cells_(static_cast<std::size_t>(plan.n) * static_cast<std::size_t>(plan.n), -1) {
        for (const auto& [a, b] : plan.tree) {
            cell(a, b) = 0;
            cell(b, a) = 0;
        }
    }

    // Runs the subtree below a fixed assignment of the first prefix.size() free edges.
    void run(const std::vector<int>& prefix, std::vector<SignedDigraph>& hits, CensusCounters& counters) {
        hits_ = &hits;
        counters_ = &counters;
        for (std::size_t e = 0; e < prefix.size(); ++e) {
            assign(e, prefix[e]);
            if (prune_ && !feasible(e)) {
                ++counters.pruned;
                return;
            }
        }
        descend(prefix.size());
    }

private:
    std::int8_t& cell(int u, int v) { return cells_[static_cast<std::size_t>(u * plan_.n + v)]; }

    void assign(std::size_t e, int k) {
        const auto [a, b] = plan_.free[e];
        cell(a, b) = static_cast<std::int8_t>(k);
        cell(b, a) = static_cast<std::int8_t>((6 - k) % 6);
    }

    bool feasible(std::size_t e) {
        const auto& subset = plan_.check[e];
        const int k = static_cast<int>(subset.size());
        sub_.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub_[static_cast<std::size_t>(i * k + j)] = cell(subset[i], subset[j]);
        if (k <= detail::kSmallOrder) {
            const detail::SmallInertia in = detail::small_inertia(k, sub_.data());
            return in.positive <= target_.inertia.positive && in.negative <= target_.inertia.negative;
        }
        const RankPrime& rp = rank_prime();
        return detail::rank_mod_p(k, sub_.data(), rp.p, rp.omega) <= target_.rank;
    }

    void descend(std::size_t e) {
        if (e == plan_.free.size()) {
            leaf();
            return;
        }
        for (int k = 0; k < 6; ++k) {
            assign(e, k);
            if (prune_ && !feasible(e)) {
                ++counters_->pruned;
                continue;
            }
            descend(e + 1);
        }
    }

    void leaf() {
        ++counters_->signatures;
        const int n = plan_.n;
        bool equal = false;
        if (n <= detail::kSmallOrder && !target_.coeffs.empty()) {
            std::int64_t c[detail::kSmallOrder + 1];
            detail::small_charpoly(n, cells_.data(), c);
            equal = std::equal(c, c + n + 1, target_.coeffs.begin());
        } else {
            equal = char_poly_exact(build()) == target_.poly;
        }
        if (!equal) return;
        ++counters_->matches;
        hits_->push_back(build());
    }

    SignedDigraph build() const {
        DigraphBuilder b(plan_.n);
        for (int u = 0; u < plan_.n; ++u)
            for (int v = u + 1; v < plan_.n; ++v) {
                const int code = cells_[static_cast<std::size_t>(u * plan_.n + v)];
                if (code >= 0) b.set(plan_.original[u], plan_.original[v], Unit(code));
            }
        return b.build();
    }

    const SearchPlan& plan_;
    const TargetData& target_;
    bool prune_;
    std::vector<std::int8_t> cells_;
    std::vector<std::int8_t> sub_;
    std::vector<SignedDigraph>* hits_ = nullptr;
    CensusCounters* counters_ = nullptr;
};

struct WorkUnit {
    std::size_t plan = 0;
    std::vector<int> prefix;
};

void add(CensusCounters& into, const CensusCounters& from) {
    into.signatures += from.signatures;
    into.pruned += from.pruned;
    into.matches += from.matches;
}

}  // namespace

CensusReport cospectral_mates(const CensusTask& task) {
    const int n = task.n;
    if (task.target_charpoly.degree() != n || task.target_charpoly.coefficients().front() != 1)
        throw std::invalid_argument("cospectral_mates: target must be monic of degree n");
    if (!task.graphs && n > kBuiltinGraphLimit)
        throw std::invalid_argument("cospectral_mates: order " + std::to_string(n) +
                                    " exceeds the built-in graph source; supply a graph6 list");

    TargetData target;
    target.n = n;
    target.poly = task.target_charpoly;
    target.inertia = inertia_of(task.target_charpoly);
    target.rank = n - target.inertia.zero;
    for (const mpz_class& c : task.target_charpoly.coefficients()) {
        if (!c.fits_slong_p()) {
            target.coeffs.clear();
            break;
        }
        target.coeffs.push_back(c.get_si());
    }

    CensusReport report;
    report.external_source = task.graphs.has_value();
    const std::vector<UnderlyingGraph>& source = task.graphs ? *task.graphs : all_graphs(n);
    const long m = n >= 2 ? task.edge_count() : 0;
    const long t = n >= 3 ? task.triangle_trace() : 0;

    std::vector<SearchPlan> plans;
    for (const UnderlyingGraph& g : source) {
        ++report.scanned.graphs;
        if (g.order() != n) continue;
        if (!task.allow_disconnected && !is_connected(g)) continue;
        if (task.prune) {
            if (static_cast<long>(g.size()) != m) continue;
            const long tri = triangle_count(g);
            if (t % 3 != 0 || t > 6 * tri || t < -6 * tri) continue;
        }
        ++report.scanned.graphs_scanned;
        plans.push_back(make_plan(g));
    }

    std::vector<WorkUnit> units;
    for (std::size_t i = 0; i < plans.size(); ++i) {
        const std::size_t depth = std::min<std::size_t>(3, plans[i].free.size());
        std::size_t combos = 1;
        for (std::size_t d = 0; d < depth; ++d) combos *= 6;
        for (std::size_t c = 0; c < combos; ++c) {
            std::vector<int> prefix(depth);
            std::size_t rest = c;
            for (std::size_t d = depth; d-- > 0;) {
                prefix[d] = static_cast<int>(rest % 6);
                rest /= 6;
            }
            units.push_back({i, std::move(prefix)});
        }
    }

    std::vector<std::vector<SignedDigraph>> unit_hits(units.size());
    std::vector<CensusCounters> unit_counters(units.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_lock;
    auto worker = [&] {
        try {
            for (std::size_t u = next++; u < units.size() && !failed; u = next++) {
                UnitSearch search(plans[units[u].plan], target, task.prune);
                search.run(units[u].prefix, unit_hits[u], unit_counters[u]);
            }
        } catch (...) {
            std::lock_guard guard(error_lock);
            if (!error) error = std::current_exception();
            failed = true;
        }
    };
    const int threads = std::min<int>(resolve_threads(task.threads), std::max<int>(1, static_cast<int>(units.size())));
    {
        std::vector<std::jthread> pool;
        for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }
    if (error) std::rethrow_exception(error);

    // deterministic reduction in unit order
    std::vector<SignedDigraph> hits;
    for (std::size_t u = 0; u < units.size(); ++u) {
        add(report.scanned, unit_counters[u]);
        for (SignedDigraph& h : unit_hits[u]) hits.push_back(std::move(h));
    }
    if (n <= kCanonicalFormLimit) {
        std::map<std::string, SignedDigraph> by_form;
        for (SignedDigraph& h : hits) {
            std::string form = canonical_form(h);
            by_form.try_emplace(std::move(form), std::move(h));
        }
        for (auto& [form, rep] : by_form) report.classes.push_back({form, std::move(rep)});
    } else {
        for (SignedDigraph& h : hits) {
            const bool known = std::any_of(report.classes.begin(), report.classes.end(), [&](const CensusClass& c) {
                return switching_isomorphic(h, c.representative).has_value();
            });
            if (!known) report.classes.push_back({std::nullopt, std::move(h)});
        }
    }
    for (const CensusClass& c : report.classes) {
        if (!(char_poly_exact(c.representative) == task.target_charpoly))
            throw std::logic_error("cospectral_mates: representative failed re-verification");
    }

    if (report.classes.size() >= 2) report.des_verdict = DesVerdict::NotDes;
    else if (report.external_source || !task.allow_disconnected) report.des_verdict = DesVerdict::ScopeLimited;
    else report.des_verdict = report.classes.size() == 1 ? DesVerdict::Des : DesVerdict::ScopeLimited;
    return report;
}

CensusReport is_des(const SignedDigraph& phi, std::optional<std::vector<UnderlyingGraph>> graphs, int threads) {
    CensusTask task = CensusTask::for_target(phi);
    task.graphs = std::move(graphs);
    task.threads = threads;
    return cospectral_mates(task);
}

// ---------------------------------------------------------------- families

std::string to_string(KnownFamily f) {
    switch (f) {
        case KnownFamily::SmallK3K3Star: return "SMALL_K3_K3STAR";
        case KnownFamily::SmallK3StarT4: return "SMALL_K3STAR_T4";
        case KnownFamily::SmallK3T4: return "SMALL_K3_T4";
        case KnownFamily::Family65: return "FAMILY_65";
        default: return "FAMILY_66";
    }
}

KnownFamily known_family_from_string(const std::string& s) {
    for (KnownFamily f : {KnownFamily::SmallK3K3Star, KnownFamily::SmallK3StarT4, KnownFamily::SmallK3T4,
                          KnownFamily::Family65, KnownFamily::Family66}) {
        if (to_string(f) == s) return f;
    }
    throw std::invalid_argument("unknown family id: " + s);
}

std::pair<SignedDigraph, SignedDigraph> known_family(KnownFamily id, int i) {
    const SignedDigraph k3 = named::complete(3);
    const SignedDigraph k3_star = named::complete_star(3);
    const SignedDigraph t4 = named::t4(true);
    switch (id) {
        case KnownFamily::SmallK3K3Star: return {twin_expand(k3, {1, 8, 15}), twin_expand(k3_star, {3, 5, 16})};
        case KnownFamily::SmallK3StarT4: return {twin_expand(k3_star, {3, 4, 7}), twin_expand(t4, {1, 1, 6, 6})};
        case KnownFamily::SmallK3T4: return {twin_expand(k3, {3, 20, 25}), twin_expand(t4, {3, 5, 10, 30})};
        default: break;
    }
    if (i < 1) throw std::invalid_argument("known_family: parameter must be at least 1");
    if (id == KnownFamily::Family65) {
        const int big = 2 * (3 * i + 1) * (i + 1);
        return {twin_expand(k3_star, {2 * i + 1, i * (3 * i + 2), big}),
                twin_expand(k3, {i, (3 * i + 1) * (i + 1), big - i})};
    }
    const ExpansionVector t4_tau{1, i * (i - 1) / 2, (i + 1) * (i + 2) / 2, i * (i + 1)};
    if (t4_tau[1] < 1)
        throw std::invalid_argument("known_family: FAMILY_66 at i=" + std::to_string(i) + " has an empty T4 block");
    return {twin_expand(k3_star, {i * (i + 1) / 2, i * (i + 1) / 2 + 1, i * (i + 1) + 1}), twin_expand(t4, t4_tau)};
}

std::vector<MateTriple> rank2_mate_solver(int f, int g) {
    if (f < 1 || g < 1) throw std::invalid_argument("rank2_mate_solver: sizes must be positive");
    const long product = static_cast<long>(f) * g;
    std::vector<MateTriple> out;
    for (long p = 1; p * p <= product; ++p) {
        if (product % p != 0) continue;
        const long q = product / p;
        if (p + q > f + g) continue;
        out.push_back({static_cast<int>(p), static_cast<int>(q), static_cast<int>(f + g - p - q)});
    }
    return out;
}

}  // namespace eisenspec
