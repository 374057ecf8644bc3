// Acceptance gate: ten criteria, one [PASS]/[FAIL] line each, exit 0 only
// when all ten hold. Every comparison is exact.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jaco/claims.hpp"
#include "jaco/cli.hpp"
#include "jaco/cliques.hpp"
#include "jaco/graph.hpp"
#include "jaco/oracles.hpp"
#include "jaco/pascal.hpp"
#include "jaco/tables.hpp"

using namespace jaco;

namespace {

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw failure(what);
}

const TableCell& cell_at(const TableDiff& d, std::uint64_t row, std::uint64_t col) {
    for (const auto& c : d.cells)
        if (c.row == row && c.col == col) return c;
    throw failure("table " + std::to_string(d.table_id) + " has no cell (" +
                  std::to_string(row) + "," + std::to_string(col) + ")");
}

int run_quiet(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

const ClaimReport& report_for(const std::vector<ClaimReport>& reports,
                              const std::string& id) {
    for (const auto& r : reports)
        if (r.claim_id == id) return r;
    throw failure("no report for claim " + id);
}

bool has_finding(const ClaimReport& r, ClaimStatus status,
                 const std::string& instance_substr) {
    for (const auto& f : r.findings)
        if (f.status == status &&
            f.instance.find(instance_substr) != std::string::npos)
            return true;
    return false;
}

// ---- criteria ----

void criterion1() {
    const auto d = regenerate_table(1);
    require(d.cells.size() == 100, "table 1 should have 100 cells");
    require(d.mismatch_count == 0, "table 1 has " +
                                       std::to_string(d.mismatch_count) +
                                       " mismatching cells");
    require(run_quiet({"tables", "--id", "1"}) == 0, "tables --id 1 must exit 0");
}

void criterion2() {
    const auto d = regenerate_table(2);
    require(d.cells.size() == 100 && d.mismatch_count == 0,
            "table 2 does not regenerate cleanly");
    for (const auto& c : d.cells)
        require(c.computed == binomial(c.row - 1, c.col - 1),
                "degree of K_" + std::to_string(c.row) + " at l=" +
                    std::to_string(c.col) + " is not C(n-1, l-1)");
}

void criterion3() {
    const auto g = JacoTypeGraph::build(SequenceSpec::positive_integers(), 8);
    const auto c = clique_census(g);
    require(c.counts() == std::vector<std::uint64_t>{8, 16, 14, 6, 1},
            "census of the worked order-8 instance is off");
    require(c.count(1) == 8 && c.count(2) == 16 && c.count(3) == 14,
            "published counts 8/16/14 not reproduced");
    const auto oracle = subset_census(g);  // all 2^8 subsets
    require(oracle.count(4) == c.count(4) && oracle.count(5) == c.count(5),
            "sizes 4 and 5 disagree with the subset oracle");
}

void criterion4() {
    const auto d = regenerate_table(3);
    for (const auto& c : d.cells)
        require(c.row > 8 || c.match,
                "table 3 mismatch inside the consistent region at (" +
                    std::to_string(c.row) + "," + std::to_string(c.col) + ")");
    const auto& m = cell_at(d, 9, 3);
    require(!m.match && m.paper == 12 && m.computed == 14,
            "expected the (9, K_3) cell to read 12 published vs 14 computed");
    const auto s2 = SequenceSpec::fibonacci();
    require(subset_census(JacoTypeGraph::build(s2, 9)).count(3) == 14,
            "subset oracle does not confirm 14 triangles at n=9");
    for (std::uint64_t n = 9; n <= 12; ++n) {
        const auto oracle = subset_census(JacoTypeGraph::build(s2, n));
        const auto rec = recurrence_census(s2, n);
        for (const auto& c : d.cells) {
            if (c.row != n) continue;
            require(c.computed == oracle.count(c.col) &&
                        c.computed == rec.count(c.col),
                    "computed cell (" + std::to_string(n) + "," +
                        std::to_string(c.col) +
                        ") not confirmed by both oracles");
        }
    }
}

void criterion5() {
    TableParams params;
    params.k = 5;
    const auto d = regenerate_table(4, params);
    require(d.cells.size() == 54 && d.mismatch_count == 0,
            "table 4 (k=5) does not regenerate cleanly");
    for (std::uint64_t n = 4; n <= 18; ++n) {
        const auto g = JacoTypeGraph::build(SequenceSpec::modulo(5), n);
        const auto c = clique_census(g);
        require(c.count(2) == 2 * n - 4,
                "edge count at n=" + std::to_string(n) + " is not 2n-4");
        require(c.count(3) == n - 3,
                "triangle count at n=" + std::to_string(n) + " is not n-3");
        require(degrees(g)[n].in == 2,
                "in-degree of the last vertex at n=" + std::to_string(n) +
                    " is not 2");
    }
}

void criterion6() {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        const auto a = clique_matrix(n);
        const auto b = clique_matrix_inverse(n);
        require(is_identity(multiply(a, b)) && is_identity(multiply(b, a)),
                "A and its inverse do not multiply to I at n=" +
                    std::to_string(n));
        // unit lower-triangular, so the determinant is exactly 1
        for (std::uint64_t i = 1; i <= n; ++i) {
            require(a.at(i, i) == 1, "diagonal entry != 1");
            for (std::uint64_t j = i + 1; j <= n; ++j)
                require(a.at(i, j) == 0, "entry above the diagonal != 0");
        }
    }
    // the elimination-based determinant lives in the claim runner
    require(run_claim("P-2.2.6").status == ClaimStatus::Verified,
            "matrix-identity claim does not verify");

    for (std::uint64_t n = 0; n <= 20; ++n)
        for (std::uint64_t j = 0; j <= n; ++j)
            require(binomial(n, j) == binomial(n, n - j),
                    "census symmetry fails at n=" + std::to_string(n) +
                        ", j=" + std::to_string(j));
    require(run_claim("T-2.2.5").status == ClaimStatus::Verified,
            "symmetry claim does not verify");

    const auto& t1 = reference_table1();
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CliqueCensus c(1, {1});  // K_1
        for (std::uint64_t k = 1; k < n; ++k) c = join_census(c);
        require(c.order() == n, "join iteration lost track of the order");
        for (std::uint64_t l = 1; l <= 10; ++l)
            require(c.count(l) == t1[n - 1][l - 1],
                    "join iteration deviates from table 1 at (" +
                        std::to_string(n) + "," + std::to_string(l) + ")");
    }
}

void criterion7() {
    std::mt19937_64 rng(kDefaultSeed);
    std::uint64_t failures = 0;
    for (int t = 0; t < 50; ++t) {
        const auto g = DenseGraph::random(1 + rng() % 9, rng);
        const auto before = subset_census(g);
        const auto after = subset_census(join_with_universal_vertex(g));
        const auto predicted = join_census(before);
        if (after.counts() != predicted.counts() ||
            after.order() != predicted.order())
            ++failures;
    }
    require(failures == 0,
            std::to_string(failures) + " of 50 random joins break the recurrence");
}

void criterion8() {
    const auto reports = run_all_claims();

    require(report_for(reports, "L-2.1.1").status == ClaimStatus::Verified,
            "L-2.1.1 must verify");
    require(report_for(reports, "L-2.1.1").range.find("30") != std::string::npos,
            "L-2.1.1 must cover n <= 30");

    const auto& p212 = report_for(reports, "P-2.1.2");
    require(p212.status == ClaimStatus::Refuted, "P-2.1.2 must be refuted overall");
    require(has_finding(p212, ClaimStatus::Verified, ""),
            "P-2.1.2 needs a verified finding for non-decreasing families");
    require(p212.witness["terms"] == nlohmann::json({2, 0, 0}),
            "P-2.1.2 witness must be the sequence (2,0,0)");

    const auto& p214 = report_for(reports, "P-2.1.4");
    require(p214.status == ClaimStatus::Refuted, "P-2.1.4 must be refuted");
    require(p214.witness["n"] == 8 && p214.witness["canonical"]["size"] == 4 &&
                p214.witness["minimum"]["size"] == 3,
            "P-2.1.4 witness must be the order-8 instance, 4 vs 3");
    require(p214.witness["canonical"]["cliques"].is_array() &&
                p214.witness["minimum"]["cliques"].is_array() &&
                p214.witness["minimum"]["cliques"].size() == 3,
            "P-2.1.4 witness must print both cover's sets");
    require(p214.witness["canonical_revalidated"] == true &&
                p214.witness["minimum_revalidated"] == true,
            "P-2.1.4 covers must be revalidated");

    for (const char* id : {"T-2.3.4", "C-2.3.5", "L-2.3.6"})
        require(report_for(reports, id).status == ClaimStatus::Verified,
                std::string(id) + " must verify");
    require(report_for(reports, "T-2.3.4").range.find("25") != std::string::npos,
            "T-2.3.4 must cover n <= 25");
    require(report_for(reports, "L-2.3.6").range.find("30") != std::string::npos,
            "L-2.3.6 must cover l <= 30");

    const auto& l237 = report_for(reports, "L-2.3.7");
    require(l237.status == ClaimStatus::Refuted, "L-2.3.7 must be refuted overall");
    require(has_finding(l237, ClaimStatus::Verified, "corrected form"),
            "the corrected recurrence must verify");
    require(l237.witness["row"] == 6, "the printed-form witness must sit at row 6");

    require(run_quiet({"verify", "--all"}) == 1,
            "verify --all must exit 1 while refutations are present");
}

void criterion9() {
    const auto t0 = std::chrono::steady_clock::now();

    const auto g = JacoTypeGraph::build(SequenceSpec::positive_integers(), 8);
    const auto cyc = brute_circumference(g);
    require(cyc.has_value(), "the order-8 instance has cycles");
    require(is_valid_cycle(g, cyc->vertices), "oracle cycle fails revalidation");
    require(cyc->length() >= 7, "longest cycle must have length >= 7");
    require(is_valid_cycle(g, {2, 3, 5, 7, 8, 6, 4}),
            "the published 7-cycle witness fails the edge check");

    const auto r = run_claim("P-2.1.3");
    require(r.status == ClaimStatus::Refuted, "P-2.1.3 must be refuted");
    require(has_finding(r, ClaimStatus::Refuted, "printed circumference 5"),
            "refutation of the printed circumference 5 must be recorded");
    require(has_finding(r, ClaimStatus::Refuted, "circumference equals omega (5)"),
            "refutation of circumference = omega = 5 must be recorded");

    const auto elapsed = std::chrono::steady_clock::now() - t0;
    require(elapsed < std::chrono::seconds(10), "adjudication exceeded 10 seconds");
}

void criterion10() {
    const std::vector<SequenceSpec> families{
        SequenceSpec::positive_integers(), SequenceSpec::fibonacci(),
        SequenceSpec::modulo(5),
        SequenceSpec::set_sequence(3, SetVariant::Definitional),
        SequenceSpec::linear_jaco()};
    for (const auto& spec : families)
        for (std::uint64_t n = 1; n <= 14; ++n) {
            const auto g = JacoTypeGraph::build(spec, n);
            const auto c = clique_census(g);
            require(c == subset_census(g),
                    "census disagrees with the subset oracle for " +
                        spec.family_name() + " at n=" + std::to_string(n));
            const auto t = vertex_clique_degrees(g);
            for (std::uint64_t l = 1; l <= c.omega(); ++l)
                require(t.column_sum(l) == l * c.count(l),
                        "column-sum identity fails for " + spec.family_name() +
                            " at n=" + std::to_string(n) +
                            ", l=" + std::to_string(l));
        }

    std::mt19937_64 rng(kDefaultSeed);
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t n = 1 + rng() % 12;
        std::vector<std::uint64_t> terms(n + 1);
        std::uint64_t a = rng() % 2;
        for (auto& x : terms) {
            a += rng() % 3;
            x = a;
        }
        const auto g =
            JacoTypeGraph::build(SequenceSpec::explicit_terms(terms), n);
        const auto h = g.extend();
        const auto dg = degrees(g);
        const auto dh = degrees(h);
        for (Vertex v = 1; v <= n; ++v)
            require(dg[v].in == dh[v].in,
                    "extension changed the in-degree of v" + std::to_string(v));
    }
    // no published result needed excluding from desk scale: nothing to skip
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "table 1 reproduced from complete-graph censuses", criterion1},
        {2, "table 2 equals the closed form C(n-1, l-1)", criterion2},
        {3, "worked order-8 census matches and the oracle agrees", criterion3},
        {4, "table 3: consistent region + documented (9, K_3) divergence",
         criterion4},
        {5, "table 4 (k=5) plus its closed forms and in-degrees", criterion5},
        {6, "matrix identities, symmetry, join iteration", criterion6},
        {7, "join recurrence on 50 seeded random graphs", criterion7},
        {8, "claim campaign lands on the required outcomes", criterion8},
        {9, "circumference adjudication with revalidated witness", criterion9},
        {10, "census oracle, column sums, extension stability", criterion10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (detail.empty()) {
            std::cout << "[PASS] criterion " << c.number << ": " << c.title
                      << '\n';
        } else {
            std::cout << "[FAIL] criterion " << c.number << ": " << c.title
                      << " -- " << detail << '\n';
            ++failed;
        }
    }
    if (failed) std::cout << failed << " of 10 criteria failed\n";
    return failed ? 1 : 0;
}
