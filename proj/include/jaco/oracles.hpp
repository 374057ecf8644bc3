#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "jaco/census.hpp"
#include "jaco/graph.hpp"

namespace jaco {

inline constexpr std::uint64_t kDefaultSubsetBudget = 14;
inline constexpr std::uint64_t kDefaultCycleBudget = 20;

// Dense undirected graph on at most 64 vertices, one adjacency bitmask per
// vertex (bit j-1 = vertex j). Deliberately naive: this is the substrate the
// brute-force checks run on.
class DenseGraph {
public:
    explicit DenseGraph(std::uint64_t n);

    static DenseGraph complete(std::uint64_t n);
    static DenseGraph from_underlying(const JacoTypeGraph& g);
    // Each of the C(n,2) edges present with probability 1/2, drawn from rng
    // in row-major pair order.
    static DenseGraph random(std::uint64_t n, std::mt19937_64& rng);

    std::uint64_t order() const { return n_; }
    void add_edge(Vertex i, Vertex j);
    bool adjacent(Vertex i, Vertex j) const;
    std::uint64_t edge_count() const;
    std::uint64_t row(Vertex i) const;

private:
    std::uint64_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// G + K_1: one extra vertex (index n+1) adjacent to every original vertex.
DenseGraph join_with_universal_vertex(const DenseGraph& g);

// Literal clique census: tests each of the 2^n - 1 non-empty vertex subsets
// for pairwise adjacency. budget_exceeded when order > budget and !force;
// order is capped at 62 structurally.
CliqueCensus subset_census(const DenseGraph& g,
                           std::uint64_t budget = kDefaultSubsetBudget,
                           bool force = false);
CliqueCensus subset_census(const JacoTypeGraph& g,
                           std::uint64_t budget = kDefaultSubsetBudget,
                           bool force = false);

// Length of a shortest cycle of the underlying graph (nullopt when acyclic):
// BFS from every vertex, taking the best dist(u) + dist(w) + 1 over non-tree
// edges scanned.
std::optional<std::uint64_t> brute_girth(const JacoTypeGraph& g);
std::optional<std::uint64_t> brute_girth(const DenseGraph& g);

struct Cycle {
    std::vector<Vertex> vertices;  // in cycle order, starting at the minimum

    std::uint64_t length() const { return vertices.size(); }
};

// A longest simple cycle of the underlying graph by exhaustive DFS (each
// cycle explored once, rooted at its smallest vertex). The witness is
// revalidated edge by edge before being returned. budget_exceeded when
// order > budget and !force.
std::optional<Cycle> brute_circumference(const JacoTypeGraph& g,
                                         std::uint64_t budget = kDefaultCycleBudget,
                                         bool force = false);

// Witness validators, deliberately independent of the search code.
bool is_valid_cycle(const JacoTypeGraph& g, const std::vector<Vertex>& cycle);
bool is_clique(const JacoTypeGraph& g, const std::vector<Vertex>& vertices);
bool is_vertex_cover_by_cliques(const JacoTypeGraph& g,
                                const std::vector<std::vector<Vertex>>& cover);

// Census built vertex by vertex: when v_{m+1} arrives with in-degree l, it
// adds one 1-clique and C(l, i-1) new i-cliques for 2 <= i <= l+1, because
// its in-neighbourhood {v_{m+1-l} .. v_m} is itself a clique. That last fact
// needs non-decreasing terms; precondition_violation otherwise.
CliqueCensus recurrence_census(const SequenceSpec& spec, std::uint64_t n);

}  // namespace jaco
