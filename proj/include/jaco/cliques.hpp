#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jaco/census.hpp"
#include "jaco/graph.hpp"

namespace jaco {

inline constexpr std::uint64_t kDefaultCoverBudget = 14;

// All maximal cliques of the underlying graph, each ascending, the list
// sorted lexicographically. Bron-Kerbosch with pivoting (pivot = candidate
// with the most neighbours among the candidates, ties to the smallest
// index).
std::vector<std::vector<Vertex>> maximal_cliques(const JacoTypeGraph& g);

// Exact count of l-cliques for every l (or up to max_size if given).
// Enumerates by increasing-index extension: once vertices i_1 < ... < i_p
// are chosen, the remaining common neighbourhood above i_p is a contiguous
// interval, so extension never scans non-candidates.
CliqueCensus clique_census(const JacoTypeGraph& g,
                           std::optional<std::uint64_t> max_size = std::nullopt);

// at(v, l) = number of l-cliques through v, same enumeration as the census.
CliqueDegreeTable vertex_clique_degrees(const JacoTypeGraph& g);

// omega(J_n): size of a largest clique.
std::uint64_t clique_number(const JacoTypeGraph& g);

enum class CoverMethod { Canonical, BruteForceMinimum };

struct CoverResult {
    std::vector<std::vector<Vertex>> cliques;  // each ascending
    CoverMethod method = CoverMethod::Canonical;

    std::uint64_t size() const { return cliques.size(); }
};

// The structural vertex cover by cliques {v_j .. v_min(j+a_j, n)} for
// j = i, i-1, ..., 1 where i is the smallest index with i + a_i >= n.
// Defined only for non-decreasing term sequences (precondition_violation
// otherwise): monotonicity is what makes each interval a clique.
CoverResult canonical_cover(const JacoTypeGraph& g);

// A genuine minimum vertex cover by cliques, found by branch-and-bound over
// the maximal cliques. Exponential worst case, so guarded by an order
// budget: throws budget_exceeded when order > budget unless force is set.
// Requires order <= 64.
CoverResult min_clique_cover(const JacoTypeGraph& g,
                             std::uint64_t budget = kDefaultCoverBudget,
                             bool force = false);

// Predicted multiset of maximal-clique sizes of J_n over a_i = i, ascending:
// 2, 3, ..., n/2 + 1 for even n; for odd n the top size (n+1)/2 appears
// twice. The count is ceil(n/2) either way; n = 1 gives {1}.
std::vector<std::uint64_t> s1_maximal_clique_sizes(std::uint64_t n);

}  // namespace jaco
