#include "jaco/pascal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jaco/checked.hpp"

namespace jaco {

std::uint64_t binomial(std::uint64_t n, std::uint64_t l) {
    if (l > n) return 0;
    l = std::min(l, n - l);
    // Multiplicative evaluation; every prefix product is itself a binomial
    // coefficient, so the division is exact and intermediate values only
    // overflow if the result does.
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= l; ++i) {
        r = r * (n - l + i) / i;
        if (r > kU64Max)
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                      std::to_string(l) + ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t eta_complete(std::uint64_t n, std::uint64_t l) {
    if (l < 1) throw std::invalid_argument("clique sizes are 1-based");
    return binomial(n, l);
}

std::uint64_t total_cliques(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    if (n > 63)
        throw std::overflow_error("2^" + std::to_string(n) + " - 1 exceeds 64 bits");
    return (1ULL << n) - 1;
}

CliqueMatrix::CliqueMatrix(std::uint64_t dim) : dim_(dim), e_(dim * dim, 0) {}

std::int64_t CliqueMatrix::at(std::uint64_t i, std::uint64_t j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside dimension " +
                                std::to_string(dim_));
    return e_[(i - 1) * dim_ + (j - 1)];
}

std::int64_t& CliqueMatrix::cell(std::uint64_t i, std::uint64_t j) {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside dimension " +
                                std::to_string(dim_));
    return e_[(i - 1) * dim_ + (j - 1)];
}

std::string CliqueMatrix::to_csv() const {
    std::ostringstream os;
    for (std::uint64_t i = 1; i <= dim_; ++i) {
        for (std::uint64_t j = 1; j <= dim_; ++j) {
            if (j > 1) os << ',';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

CliqueMatrix clique_matrix(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (n > 64)
        throw std::overflow_error("clique-count entries exceed 64 bits past dimension 64");
    CliqueMatrix m(n);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = 1; j <= i; ++j)
            m.cell(i, j) = static_cast<std::int64_t>(binomial(i, j));
    return m;
}

CliqueMatrix clique_matrix_inverse(std::uint64_t n) {
    CliqueMatrix m = clique_matrix(n);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = 1; j <= i; ++j)
            if ((i + j) % 2 == 1) m.cell(i, j) = -m.cell(i, j);
    return m;
}

CliqueMatrix multiply(const CliqueMatrix& a, const CliqueMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimensions differ");
    const std::uint64_t n = a.dim();
    CliqueMatrix out(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
        for (std::uint64_t j = 1; j <= n; ++j) {
            __int128 acc = 0;
            for (std::uint64_t k = 1; k <= n; ++k)
                acc += static_cast<__int128>(a.at(i, k)) * b.at(k, j);
            if (acc > std::numeric_limits<std::int64_t>::max() ||
                acc < std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("matrix product entry exceeds 64 bits");
            out.cell(i, j) = static_cast<std::int64_t>(acc);
        }
    }
    return out;
}

bool is_identity(const CliqueMatrix& m) {
    for (std::uint64_t i = 1; i <= m.dim(); ++i)
        for (std::uint64_t j = 1; j <= m.dim(); ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

CliqueCensus join_census(const CliqueCensus& g) {
    std::vector<std::uint64_t> counts;
    const std::uint64_t top = g.omega() + 1;
    counts.reserve(top);
    for (std::uint64_t l = 1; l <= top; ++l)
        counts.push_back(checked_add_u64(g.count(l), g.count(l - 1), "clique count"));
    return CliqueCensus(g.order() + 1, std::move(counts), g.include_empty());
}

std::uint64_t complete_clique_degree(std::uint64_t n, std::uint64_t l) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    if (l < 1 || l > n)
        throw std::invalid_argument("clique size " + std::to_string(l) +
                                    " outside [1, " + std::to_string(n) + "]");
    return binomial(n - 1, l - 1);
}

std::vector<std::uint64_t> max_degree_clique_sizes(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    if (n % 2 == 1) return {(n + 1) / 2};
    return {n / 2, n / 2 + 1};
}

}  // namespace jaco
