#include "jaco/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "jaco/checked.hpp"
#include "jaco/errors.hpp"
#include "jaco/pascal.hpp"

namespace jaco {
namespace {

void check_dense_order(std::uint64_t n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("dense graph order must be in [1, 64]");
}

// Census by testing every non-empty subset mask against adjacency rows.
CliqueCensus mask_census(const std::vector<std::uint64_t>& rows, std::uint64_t n,
                         std::uint64_t order, std::uint64_t budget, bool force) {
    if (n > budget && !force)
        throw budget_exceeded("subset census walks 2^" + std::to_string(n) +
                              " subsets; order exceeds budget " +
                              std::to_string(budget));
    if (n > 62)
        throw std::invalid_argument("subset census supports order <= 62");

    std::vector<std::uint64_t> counts(n, 0);
    const std::uint64_t top = 1ULL << n;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        bool clique = true;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint64_t higher = mask & ~((2ULL << v) - 1);
            if ((rows[v] & higher) != higher) {
                clique = false;
                break;
            }
        }
        if (clique) ++counts[std::popcount(mask) - 1];
    }
    return CliqueCensus(order, std::move(counts));
}

std::optional<std::uint64_t> girth_impl(const std::vector<std::vector<Vertex>>& adj,
                                        std::uint64_t n) {
    // BFS from every vertex; every non-tree edge scanned gives the closed
    // walk dist(u) + dist(w) + 1, whose minimum over all roots is the girth.
    std::optional<std::uint64_t> best;
    std::vector<std::int64_t> dist(n + 1);
    std::vector<Vertex> parent(n + 1);
    for (Vertex s = 1; s <= n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = 0;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop_front();
            for (Vertex w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    const auto candidate =
                        static_cast<std::uint64_t>(dist[u] + dist[w] + 1);
                    if (!best || candidate < *best) best = candidate;
                }
            }
        }
    }
    return best;
}

}  // namespace

DenseGraph::DenseGraph(std::uint64_t n) : n_(n), rows_(n, 0) {
    check_dense_order(n);
}

DenseGraph DenseGraph::complete(std::uint64_t n) {
    DenseGraph g(n);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

DenseGraph DenseGraph::from_underlying(const JacoTypeGraph& g) {
    DenseGraph d(g.order());
    for (Vertex i = 1; i <= g.order(); ++i)
        for (Vertex j = i + 1; j <= g.out_hi(i); ++j) d.add_edge(i, j);
    return d;
}

DenseGraph DenseGraph::random(std::uint64_t n, std::mt19937_64& rng) {
    DenseGraph g(n);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j)
            if (rng() & 1) g.add_edge(i, j);
    return g;
}

void DenseGraph::add_edge(Vertex i, Vertex j) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
        throw std::invalid_argument("bad edge endpoints");
    rows_[i - 1] |= 1ULL << (j - 1);
    rows_[j - 1] |= 1ULL << (i - 1);
}

bool DenseGraph::adjacent(Vertex i, Vertex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("vertex outside [1, " + std::to_string(n_) + "]");
    if (i == j) return false;
    return (rows_[i - 1] >> (j - 1)) & 1;
}

std::uint64_t DenseGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint64_t r : rows_) twice += std::popcount(r);
    return twice / 2;
}

std::uint64_t DenseGraph::row(Vertex i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("vertex outside [1, " + std::to_string(n_) + "]");
    return rows_[i - 1];
}

DenseGraph join_with_universal_vertex(const DenseGraph& g) {
    DenseGraph h(g.order() + 1);
    for (Vertex i = 1; i <= g.order(); ++i) {
        for (Vertex j = i + 1; j <= g.order(); ++j)
            if (g.adjacent(i, j)) h.add_edge(i, j);
        h.add_edge(i, g.order() + 1);
    }
    return h;
}

CliqueCensus subset_census(const DenseGraph& g, std::uint64_t budget, bool force) {
    std::vector<std::uint64_t> rows(g.order());
    for (Vertex i = 1; i <= g.order(); ++i) rows[i - 1] = g.row(i);
    return mask_census(rows, g.order(), g.order(), budget, force);
}

CliqueCensus subset_census(const JacoTypeGraph& g, std::uint64_t budget, bool force) {
    const std::uint64_t n = g.order();
    if (n > budget && !force)
        throw budget_exceeded("subset census walks 2^" + std::to_string(n) +
                              " subsets; order exceeds budget " + std::to_string(budget));
    if (n > 62)
        throw std::invalid_argument("subset census supports order <= 62");
    std::vector<std::uint64_t> rows(n, 0);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= g.out_hi(i); ++j) {
            rows[i - 1] |= 1ULL << (j - 1);
            rows[j - 1] |= 1ULL << (i - 1);
        }
    return mask_census(rows, n, n, budget, force);
}

std::optional<std::uint64_t> brute_girth(const JacoTypeGraph& g) {
    return girth_impl(g.underlying_adjacency(), g.order());
}

std::optional<std::uint64_t> brute_girth(const DenseGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.order() + 1);
    for (Vertex i = 1; i <= g.order(); ++i)
        for (Vertex j = 1; j <= g.order(); ++j)
            if (g.adjacent(i, j)) adj[i].push_back(j);
    return girth_impl(adj, g.order());
}

std::optional<Cycle> brute_circumference(const JacoTypeGraph& g, std::uint64_t budget,
                                         bool force) {
    const std::uint64_t n = g.order();
    if (n > budget && !force)
        throw budget_exceeded("longest-cycle search is exhaustive; order " +
                              std::to_string(n) + " exceeds budget " +
                              std::to_string(budget));

    const auto adj = g.underlying_adjacency();
    std::vector<Vertex> path, best;
    std::vector<char> on_path(n + 1, 0);

    // Each cycle is found exactly once, rooted at its smallest vertex s and
    // walking only vertices > s.
    std::function<void(Vertex, Vertex, std::uint64_t)> dfs =
        [&](Vertex u, Vertex s, std::uint64_t avail) {
            // even taking every unused vertex > s cannot beat the best
            if (path.size() + avail <= best.size()) return;
            for (Vertex w : adj[u]) {
                if (w == s && path.size() >= 3 && path.size() > best.size())
                    best = path;
                if (w <= s || on_path[w]) continue;
                on_path[w] = 1;
                path.push_back(w);
                dfs(w, s, avail - 1);
                path.pop_back();
                on_path[w] = 0;
            }
        };

    for (Vertex s = 1; s + 2 <= n; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(s, s, n - s);
        if (best.size() == n) break;  // Hamiltonian, cannot improve
    }

    if (best.empty()) return std::nullopt;
    if (!is_valid_cycle(g, best))
        throw std::logic_error("internal error: circumference witness failed revalidation");
    return Cycle{std::move(best)};
}

bool is_valid_cycle(const JacoTypeGraph& g, const std::vector<Vertex>& cycle) {
    if (cycle.size() < 3) return false;
    std::set<Vertex> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) return false;
    if (*seen.begin() < 1 || *seen.rbegin() > g.order()) return false;
    for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
        const Vertex a = cycle[idx];
        const Vertex b = cycle[(idx + 1) % cycle.size()];
        if (!g.has_arc(std::min(a, b), std::max(a, b))) return false;
    }
    return true;
}

bool is_clique(const JacoTypeGraph& g, const std::vector<Vertex>& vertices) {
    for (Vertex v : vertices)
        if (v < 1 || v > g.order()) return false;
    for (std::size_t x = 0; x < vertices.size(); ++x)
        for (std::size_t y = x + 1; y < vertices.size(); ++y) {
            const Vertex a = std::min(vertices[x], vertices[y]);
            const Vertex b = std::max(vertices[x], vertices[y]);
            if (a == b || !g.has_arc(a, b)) return false;
        }
    return true;
}

bool is_vertex_cover_by_cliques(const JacoTypeGraph& g,
                                const std::vector<std::vector<Vertex>>& cover) {
    std::set<Vertex> covered;
    for (const auto& c : cover) {
        if (!is_clique(g, c)) return false;
        covered.insert(c.begin(), c.end());
    }
    return covered.size() == g.order();
}

CliqueCensus recurrence_census(const SequenceSpec& spec, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    const auto terms = sequence_prefix_saturating(spec, n);
    for (std::uint64_t i = 1; i < n; ++i)
        if (terms[i] < terms[i - 1])
            throw precondition_violation(
                "recurrence census requires non-decreasing terms");

    std::vector<std::uint64_t> counts{1};  // the one-vertex graph
    for (std::uint64_t m = 1; m < n; ++m) {
        // in-degree of the arriving vertex v_{m+1}
        std::uint64_t l = 0;
        for (std::uint64_t i = 1; i <= m; ++i)
            if (sat_add_u64(i, terms[i - 1]) >= m + 1) ++l;
        if (counts.size() < l + 1) counts.resize(l + 1, 0);
        counts[0] = checked_add_u64(counts[0], 1, "clique count");
        for (std::uint64_t i = 2; i <= l + 1; ++i)
            counts[i - 1] =
                checked_add_u64(counts[i - 1], binomial(l, i - 1), "clique count");
    }
    return CliqueCensus(n, std::move(counts));
}

}  // namespace jaco
