#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jaco/census.hpp"

namespace jaco {

// C(n, l); 0 when l > n. Throws std::overflow_error when the exact value
// does not fit 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t l);

// Number of distinct l-cliques of the complete graph K_n, i.e. C(n, l).
// Requires l >= 1.
std::uint64_t eta_complete(std::uint64_t n, std::uint64_t l);

// Number of non-empty cliques of K_n, 2^n - 1. Requires 1 <= n <= 63.
std::uint64_t total_cliques(std::uint64_t n);

// Small dense lower-triangular integer matrix, 1-based indexing.
class CliqueMatrix {
public:
    CliqueMatrix() = default;
    explicit CliqueMatrix(std::uint64_t dim);

    std::uint64_t dim() const { return dim_; }
    std::int64_t at(std::uint64_t i, std::uint64_t j) const;
    std::int64_t& cell(std::uint64_t i, std::uint64_t j);

    friend bool operator==(const CliqueMatrix&, const CliqueMatrix&) = default;

    std::string to_csv() const;  // no header, one row per line

private:
    std::uint64_t dim_ = 0;
    std::vector<std::int64_t> e_;
};

// n x n matrix with entry (i, j) = C(i, j): row i lists the clique counts of
// K_i. Entries exceed 64 bits past dimension 64, so n <= 64.
CliqueMatrix clique_matrix(std::uint64_t n);

// Its inverse, entry (i, j) = (-1)^(i+j) C(i, j).
CliqueMatrix clique_matrix_inverse(std::uint64_t n);

// Exact product; throws std::overflow_error if an entry leaves 64-bit range.
CliqueMatrix multiply(const CliqueMatrix& a, const CliqueMatrix& b);
bool is_identity(const CliqueMatrix& m);

// Census of the join G + K_1 (one new vertex adjacent to everything) from
// the census of G: every clique either avoids the new vertex or is a clique
// of G extended by it, so count'(l) = count(l) + count(l-1).
CliqueCensus join_census(const CliqueCensus& g);

// Number of l-cliques of K_n through one fixed vertex: C(n-1, l-1).
// Requires 1 <= l <= n.
std::uint64_t complete_clique_degree(std::uint64_t n, std::uint64_t l);

// The sizes l at which complete_clique_degree(n, .) is maximal:
// {(n+1)/2} for odd n, {n/2, n/2 + 1} for even n. Ascending.
std::vector<std::uint64_t> max_degree_clique_sizes(std::uint64_t n);

}  // namespace jaco
