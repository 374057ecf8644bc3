#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jaco {

// Counts of distinct complete subgraphs by size: count(l) is the number of
// l-cliques, l = 1..omega. count(0) is always 1 (the empty clique); whether
// serialized output includes that row is controlled by include_empty.
class CliqueCensus {
public:
    CliqueCensus() = default;
    // counts[l-1] = number of l-cliques; trailing zeros are trimmed.
    CliqueCensus(std::uint64_t order, std::vector<std::uint64_t> counts,
                 bool include_empty = false);

    std::uint64_t order() const { return order_; }
    // Largest l with a nonzero count (0 for an impossible all-zero census).
    std::uint64_t omega() const { return counts_.size(); }
    std::uint64_t count(std::uint64_t l) const;
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    // Sum over all sizes >= 1.
    std::uint64_t total() const;

    bool include_empty() const { return include_empty_; }
    void set_include_empty(bool b) { include_empty_ = b; }

    // Equality is structural (order and counts); the serialization flag is
    // presentation only.
    friend bool operator==(const CliqueCensus& a, const CliqueCensus& b) {
        return a.order_ == b.order_ && a.counts_ == b.counts_;
    }

    std::string to_csv() const;   // header "l,count"
    std::string to_json() const;

private:
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> counts_;
    bool include_empty_ = false;
};

// Per-vertex clique participation counts: at(v, l) is the number of
// l-cliques containing v.
class CliqueDegreeTable {
public:
    CliqueDegreeTable() = default;
    CliqueDegreeTable(std::uint64_t order, std::uint64_t omega);

    std::uint64_t order() const { return order_; }
    std::uint64_t omega() const { return omega_; }

    // v is 1-based, 1 <= l; returns 0 for l > omega. Throws std::out_of_range
    // for a vertex outside [1, order] or l = 0.
    std::uint64_t at(std::uint64_t v, std::uint64_t l) const;
    std::uint64_t& cell(std::uint64_t v, std::uint64_t l);

    // Sum of column l over all vertices: equals l * (number of l-cliques).
    std::uint64_t column_sum(std::uint64_t l) const;

    std::string to_csv() const;   // header "vertex,l,count"
    std::string to_json() const;

private:
    std::uint64_t order_ = 0;
    std::uint64_t omega_ = 0;
    std::vector<std::uint64_t> cells_;  // row-major, (v-1)*omega_ + (l-1)
};

}  // namespace jaco
