#include "jaco/census.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jaco {

CliqueCensus::CliqueCensus(std::uint64_t order, std::vector<std::uint64_t> counts,
                           bool include_empty)
    : order_(order), counts_(std::move(counts)), include_empty_(include_empty) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

std::uint64_t CliqueCensus::count(std::uint64_t l) const {
    if (l == 0) return 1;
    return l <= counts_.size() ? counts_[l - 1] : 0;
}

std::uint64_t CliqueCensus::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts_) sum += c;
    return sum;
}

std::string CliqueCensus::to_csv() const {
    std::ostringstream os;
    os << "l,count\n";
    if (include_empty_) os << "0,1\n";
    for (std::size_t l = 1; l <= counts_.size(); ++l)
        os << l << ',' << counts_[l - 1] << '\n';
    return os.str();
}

std::string CliqueCensus::to_json() const {
    nlohmann::json j;
    j["order"] = order_;
    j["omega"] = omega();
    j["include_empty"] = include_empty_;
    j["counts"] = counts_;
    return j.dump(2) + "\n";
}

CliqueDegreeTable::CliqueDegreeTable(std::uint64_t order, std::uint64_t omega)
    : order_(order), omega_(omega), cells_(order * omega, 0) {}

std::uint64_t CliqueDegreeTable::at(std::uint64_t v, std::uint64_t l) const {
    if (v < 1 || v > order_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " +
                                std::to_string(order_) + "]");
    if (l < 1) throw std::out_of_range("clique sizes are 1-based");
    if (l > omega_) return 0;
    return cells_[(v - 1) * omega_ + (l - 1)];
}

std::uint64_t& CliqueDegreeTable::cell(std::uint64_t v, std::uint64_t l) {
    if (v < 1 || v > order_ || l < 1 || l > omega_)
        throw std::out_of_range("degree table cell (" + std::to_string(v) + ", " +
                                std::to_string(l) + ") out of range");
    return cells_[(v - 1) * omega_ + (l - 1)];
}

std::uint64_t CliqueDegreeTable::column_sum(std::uint64_t l) const {
    std::uint64_t sum = 0;
    for (std::uint64_t v = 1; v <= order_; ++v) sum += at(v, l);
    return sum;
}

std::string CliqueDegreeTable::to_csv() const {
    std::ostringstream os;
    os << "vertex,l,count\n";
    for (std::uint64_t v = 1; v <= order_; ++v)
        for (std::uint64_t l = 1; l <= omega_; ++l)
            os << v << ',' << l << ',' << at(v, l) << '\n';
    return os.str();
}

std::string CliqueDegreeTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t v = 1; v <= order_; ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint64_t l = 1; l <= omega_; ++l) row.push_back(at(v, l));
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["order"] = order_;
    j["omega"] = omega_;
    j["degrees"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace jaco
