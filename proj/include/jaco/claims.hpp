#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace jaco {

// Default RNG seed for randomized checks; override with --seed or JACO_SEED.
inline constexpr std::uint64_t kDefaultSeed = 20160212;

enum class ClaimStatus { Verified, Refuted, Partial };

std::string to_string(ClaimStatus s);

struct ClaimParams {
    std::uint64_t seed = kDefaultSeed;
    // 0 = use each claim's own default range.
    std::uint64_t max_n = 0;
    std::uint64_t subset_budget = 14;
    std::uint64_t cycle_budget = 20;
    std::uint64_t cover_budget = 14;
    // Empty = every family the claim covers; otherwise one of the canonical
    // family names or the CLI shorthands s1/s2/s3/s4/linear.
    std::string family_filter;
};

// One checked sub-statement of a claim. Refuted findings carry a concrete
// witness (always revalidated independently of the search that found it);
// verified findings may carry supporting data.
struct Finding {
    std::string instance;
    ClaimStatus status = ClaimStatus::Verified;
    nlohmann::json witness;
    std::string note;
};

struct ClaimReport {
    std::string claim_id;
    std::string range;  // what was actually checked: families, orders, budgets
    ClaimStatus status = ClaimStatus::Verified;
    std::vector<Finding> findings;
    nlohmann::json witness;  // first refuting witness, if any
    std::string notes;
    std::uint64_t seed = kDefaultSeed;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

// All registered claim ids, ascending.
std::vector<std::string> claim_ids();

// Runs one claim check end to end. Unknown id: std::invalid_argument.
// Budgets that prove too small for a sub-check degrade that finding to
// Partial rather than throwing.
ClaimReport run_claim(const std::string& claim_id, const ClaimParams& params = {});

std::vector<ClaimReport> run_all_claims(const ClaimParams& params = {});

}  // namespace jaco
