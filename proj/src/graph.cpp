#include "jaco/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jaco/checked.hpp"
#include "json.hpp"

namespace jaco {
namespace {

nlohmann::json spec_to_json(const SequenceSpec& spec) {
    nlohmann::json j;
    j["family"] = spec.family_name();
    switch (spec.kind) {
        case Family::ModuloK:
            j["k"] = spec.k;
            break;
        case Family::SetSequence:
            j["base"] = spec.base;
            j["variant"] = spec.set_variant == SetVariant::Definitional
                               ? "definitional"
                               : "paper-figure";
            break;
        case Family::Explicit:
            j["terms"] = spec.terms;
            break;
        default:
            break;
    }
    return j;
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "dot") return GraphFormat::Dot;
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "json") return GraphFormat::Json;
    throw std::invalid_argument("unknown graph format \"" + name +
                                "\" (expected dot, edge-list or json)");
}

JacoTypeGraph JacoTypeGraph::build(const SequenceSpec& spec, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("graph order must be positive");
    spec.validate();
    JacoTypeGraph g;
    g.spec_ = spec;
    g.n_ = n;
    const auto prefix = sequence_prefix_saturating(spec, n);
    g.terms_.assign(n + 1, 0);
    g.out_hi_.assign(n + 1, 0);
    for (std::uint64_t i = 1; i <= n; ++i) {
        g.terms_[i] = prefix[i - 1];
        g.out_hi_[i] = std::min(sat_add_u64(i, prefix[i - 1]), n);
    }
    return g;
}

std::uint64_t JacoTypeGraph::term(Vertex i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("vertex " + std::to_string(i) + " outside [1, " +
                                std::to_string(n_) + "]");
    return terms_[i];
}

Vertex JacoTypeGraph::out_hi(Vertex i) const {
    if (i < 1 || i > n_)
        throw std::out_of_range("vertex " + std::to_string(i) + " outside [1, " +
                                std::to_string(n_) + "]");
    return out_hi_[i];
}

bool JacoTypeGraph::has_arc(Vertex i, Vertex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("arc endpoint outside [1, " + std::to_string(n_) + "]");
    return i < j && j <= out_hi_[i];
}

std::uint64_t JacoTypeGraph::out_degree(Vertex i) const {
    return out_hi(i) - i;
}

std::uint64_t JacoTypeGraph::arc_count() const {
    std::uint64_t total = 0;
    for (Vertex i = 1; i <= n_; ++i) total += out_hi_[i] - i;
    return total;
}

JacoTypeGraph JacoTypeGraph::extend() const {
    JacoTypeGraph g;
    g.spec_ = spec_;
    g.n_ = n_ + 1;
    g.terms_ = terms_;
    g.terms_.push_back(sequence_prefix_saturating(spec_, n_ + 1).back());
    g.out_hi_.assign(g.n_ + 1, 0);
    for (Vertex i = 1; i <= g.n_; ++i)
        g.out_hi_[i] = std::min(sat_add_u64(i, g.terms_[i]), g.n_);
    return g;
}

std::vector<std::vector<Vertex>> JacoTypeGraph::underlying_adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_ + 1);
    // Processing tails ascending keeps every list sorted: lower neighbours of
    // i are appended while scanning i' < i, higher ones during i's own scan.
    for (Vertex i = 1; i <= n_; ++i) {
        for (Vertex j = i + 1; j <= out_hi_[i]; ++j) {
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    }
    return adj;
}

std::vector<VertexDegrees> degrees(const JacoTypeGraph& g) {
    const std::uint64_t n = g.order();
    std::vector<VertexDegrees> d(n + 1);
    // In-degrees via a difference array over the out-intervals.
    std::vector<std::int64_t> diff(n + 2, 0);
    for (Vertex i = 1; i <= n; ++i) {
        d[i].out = g.out_hi(i) - i;
        if (g.out_hi(i) > i) {
            diff[i + 1] += 1;
            diff[g.out_hi(i) + 1] -= 1;
        }
    }
    std::int64_t run = 0;
    for (Vertex j = 1; j <= n; ++j) {
        run += diff[j];
        d[j].in = static_cast<std::uint64_t>(run);
        d[j].total = d[j].in + d[j].out;
    }
    return d;
}

JaconianSet jaconian_set(const JacoTypeGraph& g) {
    const auto d = degrees(g);
    JaconianSet js;
    for (Vertex v = 1; v <= g.order(); ++v)
        js.max_degree = std::max(js.max_degree, d[v].total);
    for (Vertex v = 1; v <= g.order(); ++v)
        if (d[v].total == js.max_degree) js.vertices.push_back(v);
    return js;
}

std::string export_graph(const JacoTypeGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Dot: {
            std::ostringstream os;
            os << "digraph J {\n";
            for (Vertex i = 1; i <= g.order(); ++i)
                os << "  v" << i << ";\n";
            for (Vertex i = 1; i <= g.order(); ++i)
                for (Vertex j = i + 1; j <= g.out_hi(i); ++j)
                    os << "  v" << i << " -> v" << j << ";\n";
            os << "}\n";
            return os.str();
        }
        case GraphFormat::EdgeList: {
            std::ostringstream os;
            for (Vertex i = 1; i <= g.order(); ++i)
                for (Vertex j = i + 1; j <= g.out_hi(i); ++j)
                    os << i << ' ' << j << '\n';
            return os.str();
        }
        case GraphFormat::Json: {
            nlohmann::json j;
            j["order"] = g.order();
            j["terms"] = std::vector<std::uint64_t>();
            for (Vertex i = 1; i <= g.order(); ++i) j["terms"].push_back(g.term(i));
            j["arc_count"] = g.arc_count();
            nlohmann::json arcs = nlohmann::json::array();
            for (Vertex i = 1; i <= g.order(); ++i)
                for (Vertex jx = i + 1; jx <= g.out_hi(i); ++jx)
                    arcs.push_back({i, jx});
            j["arcs"] = std::move(arcs);
            j["spec"] = spec_to_json(g.spec());
            return j.dump(2) + "\n";
        }
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace jaco
