#include "jaco/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jaco/claims.hpp"
#include "jaco/cliques.hpp"
#include "jaco/errors.hpp"
#include "jaco/graph.hpp"
#include "jaco/oracles.hpp"
#include "jaco/pascal.hpp"
#include "jaco/sequence.hpp"
#include "jaco/tables.hpp"

namespace jaco::cli {
namespace {

using nlohmann::json;

struct FamilyOptions {
    std::string family = "s1";
    std::uint64_t k = 5;
    std::uint64_t base = 3;
    std::string variant = "definitional";
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "term sequence: s1 (a_i = i), s2 (Fibonacci), "
                        "s3 (i mod k), s4 (set-sequence sums), linear, custom")
            ->check(CLI::IsMember({"s1", "s2", "s3", "s4", "linear", "custom"}));
        cmd->add_option("--k", k, "modulus for --family s3 (default 5)");
        cmd->add_option("--base", base, "base for --family s4 (default 3)");
        cmd->add_option("--variant", variant,
                        "s4 flavour: definitional | paper-figure")
            ->check(CLI::IsMember({"definitional", "paper-figure"}));
        cmd->add_option("--file", file,
                        "terms file for --family custom (one integer per "
                        "line, # comments allowed)");
    }

    SequenceSpec spec() const {
        if (family == "s1") return SequenceSpec::positive_integers();
        if (family == "s2") return SequenceSpec::fibonacci();
        if (family == "s3") return SequenceSpec::modulo(k);
        if (family == "s4")
            return SequenceSpec::set_sequence(base, variant == "paper-figure"
                                                        ? SetVariant::PaperFigure
                                                        : SetVariant::Definitional);
        if (family == "linear") return SequenceSpec::linear_jaco();
        if (file.empty())
            throw std::invalid_argument("--family custom needs --file");
        return load_explicit_sequence_file(file);
    }

    std::string describe() const {
        if (family == "s3") return "s3 (k=" + std::to_string(k) + ")";
        if (family == "s4")
            return "s4 (base=" + std::to_string(base) + ", " + variant + ")";
        if (family == "custom") return "custom (" + file + ")";
        return family;
    }
};

int write_output(const std::string& path, const std::string& text,
                 std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot open \"" << path << "\" for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_option) {
    if (seed_given) return seed_option;
    if (const char* env = std::getenv("JACO_SEED")) {
        std::uint64_t v = 0;
        const char* end = env + std::string_view(env).size();
        auto [p, ec] = std::from_chars(env, end, v);
        if (ec != std::errc() || p != end)
            throw std::invalid_argument(
                "JACO_SEED must be an unsigned integer, got \"" +
                std::string(env) + "\"");
        return v;
    }
    return kDefaultSeed;
}

std::string cover_text(const CoverResult& c) {
    std::ostringstream os;
    os << c.size() << " clique" << (c.size() == 1 ? "" : "s") << ":";
    for (const auto& q : c.cliques) {
        os << " {";
        for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
        os << "}";
    }
    return os.str();
}

json cover_json(const CoverResult& c) {
    return json{{"size", c.size()}, {"cliques", c.cliques}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite graphs from integer out-degree sequences: "
                 "construction, clique censuses, and claim checking"};
    app.name("jaco");
    app.require_subcommand(1);

    // build ------------------------------------------------------------
    auto* build = app.add_subcommand("build", "construct a graph and print it");
    std::uint64_t build_n = 0;
    std::string build_format = "dot", build_out;
    FamilyOptions build_fam;
    build->add_option("--n", build_n, "graph order")->required();
    build_fam.attach(build);
    build->add_option("--format", build_format, "dot | edge-list | json")
        ->check(CLI::IsMember({"dot", "edge-list", "json"}));
    build->add_option("--out", build_out, "write to file instead of stdout");

    // census -----------------------------------------------------------
    auto* census = app.add_subcommand("census", "count cliques by size");
    std::uint64_t census_n = 0, census_max = 0;
    bool census_empty = false;
    std::string census_format = "csv", census_out;
    FamilyOptions census_fam;
    census->add_option("--n", census_n, "graph order")->required();
    census_fam.attach(census);
    census->add_option("--max-size", census_max, "count cliques up to this size only");
    census->add_flag("--include-empty", census_empty, "emit the l = 0 row too");
    census->add_option("--format", census_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--out", census_out, "write to file instead of stdout");

    // degrees ----------------------------------------------------------
    auto* degs = app.add_subcommand(
        "degrees", "per-vertex counts of cliques through each vertex");
    std::uint64_t degs_n = 0;
    std::string degs_format = "csv", degs_out;
    FamilyOptions degs_fam;
    degs->add_option("--n", degs_n, "graph order")->required();
    degs_fam.attach(degs);
    degs->add_option("--format", degs_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    degs->add_option("--out", degs_out, "write to file instead of stdout");

    // maximal ----------------------------------------------------------
    auto* maximal = app.add_subcommand("maximal", "list all maximal cliques");
    std::uint64_t maximal_n = 0;
    std::string maximal_format = "text", maximal_out;
    FamilyOptions maximal_fam;
    maximal->add_option("--n", maximal_n, "graph order")->required();
    maximal_fam.attach(maximal);
    maximal->add_option("--format", maximal_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    maximal->add_option("--out", maximal_out, "write to file instead of stdout");

    // invariants ---------------------------------------------------------
    auto* inv = app.add_subcommand(
        "invariants", "order, degrees, girth, circumference, covers");
    std::uint64_t inv_n = 0;
    std::uint64_t inv_cycle_cap = kDefaultCycleBudget;
    std::uint64_t inv_cover_cap = kDefaultCoverBudget;
    bool inv_force = false;
    std::string inv_format = "text", inv_out;
    FamilyOptions inv_fam;
    inv->add_option("--n", inv_n, "graph order")->required();
    inv_fam.attach(inv);
    inv->add_option("--cycle-cap", inv_cycle_cap,
                    "largest order for the exhaustive cycle search");
    inv->add_option("--cover-cap", inv_cover_cap,
                    "largest order for the minimum-cover search");
    inv->add_flag("--force", inv_force, "run the exponential searches anyway");
    inv->add_option("--format", inv_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    inv->add_option("--out", inv_out, "write to file instead of stdout");

    // pascal -------------------------------------------------------------
    auto* pascal = app.add_subcommand(
        "pascal", "clique matrix of complete graphs and its inverse");
    std::uint64_t pascal_n = 0;
    std::string pascal_what = "matrix", pascal_out;
    pascal->add_option("--n", pascal_n, "matrix dimension / graph order")->required();
    pascal->add_option("--what", pascal_what, "matrix | inverse | degrees")
        ->check(CLI::IsMember({"matrix", "inverse", "degrees"}));
    pascal->add_option("--out", pascal_out, "write to file instead of stdout");

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check published claims");
    std::string verify_claim, verify_family, verify_format = "text", verify_out;
    bool verify_all = false;
    ClaimParams params;
    std::uint64_t verify_seed = kDefaultSeed;
    verify->add_option("--claim", verify_claim, "claim id, e.g. P-2.1.4");
    verify->add_flag("--all", verify_all, "run every registered claim");
    auto* seed_opt =
        verify->add_option("--seed", verify_seed,
                           "RNG seed for randomized checks (overrides JACO_SEED)");
    verify->add_option("--n", params.max_n,
                       "narrow the claim to orders up to this value");
    verify->add_option("--family", verify_family,
                       "narrow the claim to one family: s1|s2|s3|s4|linear|custom")
        ->check(CLI::IsMember({"s1", "s2", "s3", "s4", "linear", "custom"}));
    verify->add_option("--subset-budget", params.subset_budget,
                       "largest order for the subset oracle");
    verify->add_option("--cycle-budget", params.cycle_budget,
                       "largest order for the exhaustive cycle search");
    verify->add_option("--cover-budget", params.cover_budget,
                       "largest order for the minimum-cover search");
    verify->add_option("--format", verify_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_out, "write to file instead of stdout");

    // tables -------------------------------------------------------------
    auto* tables = app.add_subcommand(
        "tables", "recompute a published table and diff it cell by cell");
    std::uint64_t tables_id = 0;
    std::string tables_out;
    TableParams table_params;
    std::string tables_variant = "paper-figure";
    tables->add_option("--id", tables_id, "table number, 1..5")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{5}));
    tables->add_option("--k", table_params.k, "modulus for table 4 (default 5)");
    tables->add_option("--variant", tables_variant,
                       "s4 flavour for table 5: definitional | paper-figure")
        ->check(CLI::IsMember({"definitional", "paper-figure"}));
    tables->add_option("--out", tables_out, "write to file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* a = &app;
        while (!a->get_subcommands().empty()) a = a->get_subcommands().front();
        out << a->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run \"jaco --help\" for usage\n";
        return 2;
    }

    try {
        if (app.got_subcommand(build)) {
            const auto g = JacoTypeGraph::build(build_fam.spec(), build_n);
            return write_output(build_out,
                                export_graph(g, parse_graph_format(build_format)),
                                out, err);
        }

        if (app.got_subcommand(census)) {
            const auto g = JacoTypeGraph::build(census_fam.spec(), census_n);
            auto c = clique_census(
                g, census_max ? std::optional<std::uint64_t>(census_max)
                              : std::nullopt);
            c.set_include_empty(census_empty);
            return write_output(
                census_out, census_format == "json" ? c.to_json() : c.to_csv(),
                out, err);
        }

        if (app.got_subcommand(degs)) {
            const auto g = JacoTypeGraph::build(degs_fam.spec(), degs_n);
            const auto t = vertex_clique_degrees(g);
            return write_output(degs_out,
                                degs_format == "json" ? t.to_json() : t.to_csv(),
                                out, err);
        }

        if (app.got_subcommand(maximal)) {
            const auto g = JacoTypeGraph::build(maximal_fam.spec(), maximal_n);
            const auto mc = maximal_cliques(g);
            std::string text;
            if (maximal_format == "json") {
                text = json{{"order", g.order()}, {"maximal_cliques", mc}}.dump(2);
                text += '\n';
            } else {
                std::ostringstream os;
                for (const auto& q : mc) {
                    for (std::size_t i = 0; i < q.size(); ++i)
                        os << (i ? " " : "") << q[i];
                    os << '\n';
                }
                text = os.str();
            }
            return write_output(maximal_out, text, out, err);
        }

        if (app.got_subcommand(inv)) {
            const auto g = JacoTypeGraph::build(inv_fam.spec(), inv_n);
            const auto deg = degrees(g);
            const auto jac = jaconian_set(g);
            const auto girth = brute_girth(g);
            const std::uint64_t omega = clique_number(g);

            std::optional<Cycle> circ;
            std::string circ_skip;
            try {
                circ = brute_circumference(g, inv_cycle_cap, inv_force);
            } catch (const budget_exceeded& e) {
                circ_skip = e.what();
            }

            std::optional<CoverResult> canonical;
            std::string canonical_skip;
            try {
                canonical = canonical_cover(g);
            } catch (const precondition_violation& e) {
                canonical_skip = e.what();
            }

            std::optional<CoverResult> minimum;
            std::string minimum_skip;
            try {
                minimum = min_clique_cover(g, inv_cover_cap, inv_force);
            } catch (const budget_exceeded& e) {
                minimum_skip = e.what();
            } catch (const std::invalid_argument& e) {
                minimum_skip = e.what();  // order > 64
            }

            std::string text;
            if (inv_format == "json") {
                json j{{"order", g.order()},
                       {"family", inv_fam.describe()},
                       {"arcs", g.arc_count()},
                       {"max_degree", jac.max_degree},
                       {"jaconian_set", jac.vertices},
                       {"girth", girth ? json(*girth) : json()},
                       {"clique_number", omega}};
                if (circ)
                    j["circumference"] =
                        json{{"length", circ->length()}, {"cycle", circ->vertices}};
                else if (!circ_skip.empty())
                    j["circumference"] = json{{"skipped", circ_skip}};
                else
                    j["circumference"] = json();  // acyclic
                if (canonical)
                    j["canonical_cover"] = cover_json(*canonical);
                else
                    j["canonical_cover"] = json{{"undefined", canonical_skip}};
                if (minimum)
                    j["minimum_cover"] = cover_json(*minimum);
                else
                    j["minimum_cover"] = json{{"skipped", minimum_skip}};
                text = j.dump(2) + "\n";
            } else {
                std::ostringstream os;
                os << "J_" << g.order() << " over " << inv_fam.describe() << '\n';
                os << "order: " << g.order() << '\n';
                os << "arcs: " << g.arc_count() << '\n';
                os << "max degree: " << jac.max_degree << '\n';
                os << "jaconian set: {";
                for (std::size_t i = 0; i < jac.vertices.size(); ++i)
                    os << (i ? "," : "") << jac.vertices[i];
                os << "}\n";
                if (girth)
                    os << "girth: " << *girth << '\n';
                else
                    os << "girth: none (acyclic)\n";
                if (circ) {
                    os << "circumference: " << circ->length() << " (cycle:";
                    for (auto v : circ->vertices) os << ' ' << v;
                    os << ")\n";
                } else if (!circ_skip.empty()) {
                    os << "circumference: skipped (" << circ_skip << ")\n";
                } else {
                    os << "circumference: none (acyclic)\n";
                }
                os << "clique number: " << omega << '\n';
                if (canonical)
                    os << "canonical cover: " << cover_text(*canonical) << '\n';
                else
                    os << "canonical cover: undefined (" << canonical_skip << ")\n";
                if (minimum)
                    os << "minimum cover: " << cover_text(*minimum) << '\n';
                else
                    os << "minimum cover: skipped (" << minimum_skip << ")\n";
                text = os.str();
            }
            return write_output(inv_out, text, out, err);
        }

        if (app.got_subcommand(pascal)) {
            std::string text;
            if (pascal_what == "degrees") {
                std::ostringstream os;
                os << "l,degree\n";
                for (std::uint64_t l = 1; l <= pascal_n; ++l)
                    os << l << ',' << complete_clique_degree(pascal_n, l) << '\n';
                text = os.str();
            } else {
                const auto m = pascal_what == "inverse"
                                   ? clique_matrix_inverse(pascal_n)
                                   : clique_matrix(pascal_n);
                text = m.to_csv();
            }
            return write_output(pascal_out, text, out, err);
        }

        if (app.got_subcommand(verify)) {
            if (verify_all == !verify_claim.empty()) {
                err << "error: pass exactly one of --claim ID or --all\n";
                return 2;
            }
            params.seed = resolve_seed(seed_opt->count() > 0, verify_seed);
            params.family_filter = verify_family;

            std::vector<ClaimReport> reports;
            if (verify_all)
                reports = run_all_claims(params);
            else
                reports.push_back(run_claim(verify_claim, params));

            std::string text;
            if (verify_format == "json") {
                if (verify_all) {
                    json arr = json::array();
                    for (const auto& r : reports) arr.push_back(r.to_json());
                    text = arr.dump(2) + "\n";
                } else {
                    text = reports.front().to_json().dump(2) + "\n";
                }
            } else {
                std::ostringstream os;
                std::uint64_t verified = 0, refuted = 0, partial = 0;
                for (const auto& r : reports) {
                    os << r.to_text();
                    if (reports.size() > 1) os << '\n';
                    verified += r.status == ClaimStatus::Verified;
                    refuted += r.status == ClaimStatus::Refuted;
                    partial += r.status == ClaimStatus::Partial;
                }
                if (reports.size() > 1) {
                    os << "summary: " << verified << " verified, " << refuted
                       << " refuted, " << partial << " partial\n";
                }
                text = os.str();
            }
            const int rc = write_output(verify_out, text, out, err);
            if (rc != 0) return rc;
            for (const auto& r : reports)
                if (r.status == ClaimStatus::Refuted) return 1;
            return 0;
        }

        if (app.got_subcommand(tables)) {
            table_params.variant = tables_variant == "definitional"
                                       ? SetVariant::Definitional
                                       : SetVariant::PaperFigure;
            const auto diff = regenerate_table(tables_id, table_params);
            const int rc = write_output(tables_out, diff.to_csv(), out, err);
            if (rc != 0) return rc;
            return diff.mismatch_count > 0 ? 1 : 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace jaco::cli
