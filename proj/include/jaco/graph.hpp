#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jaco/sequence.hpp"

namespace jaco {

using Vertex = std::uint64_t;

struct VertexDegrees {
    std::uint64_t in = 0;
    std::uint64_t out = 0;
    std::uint64_t total = 0;
};

// Vertices attaining the maximum total degree of the underlying graph.
struct JaconianSet {
    std::uint64_t max_degree = 0;
    std::vector<Vertex> vertices;  // ascending
};

enum class GraphFormat { Dot, EdgeList, Json };

// "dot" | "edge-list" | "json"; std::invalid_argument otherwise.
GraphFormat parse_graph_format(const std::string& name);

// Finite Jaco-type graph J_n({a_i}): vertices v_1..v_n, arc (v_i, v_j) iff
// i < j <= i + a_i. Every out-neighborhood is therefore the contiguous index
// interval (i, out_hi(i)], which is all the adjacency state kept: one upper
// bound per vertex. Immutable once built.
class JacoTypeGraph {
public:
    // Throws std::invalid_argument for n = 0 or an invalid spec, and
    // propagates sequence errors (e.g. an explicit list shorter than n).
    static JacoTypeGraph build(const SequenceSpec& spec, std::uint64_t n);

    std::uint64_t order() const { return n_; }
    const SequenceSpec& spec() const { return spec_; }

    // a_i as used in construction (1-based; saturated at 2^64-1 where the
    // true term does not fit, which cannot change any arc).
    std::uint64_t term(Vertex i) const;

    // min(i + a_i, n): the largest index v_i dominates.
    Vertex out_hi(Vertex i) const;

    // Throws std::out_of_range when either endpoint is outside [1, n].
    bool has_arc(Vertex i, Vertex j) const;

    std::uint64_t out_degree(Vertex i) const;
    std::uint64_t arc_count() const;

    // J_{n+1} over the same sequence. Existing terms are reused; arcs of the
    // old graph are preserved and previously clipped intervals may reach the
    // new vertex.
    JacoTypeGraph extend() const;

    // Adjacency lists of the underlying undirected graph, 1-based outer
    // index, neighbours ascending.
    std::vector<std::vector<Vertex>> underlying_adjacency() const;

private:
    JacoTypeGraph() = default;

    SequenceSpec spec_;
    std::uint64_t n_ = 0;
    std::vector<std::uint64_t> terms_;  // [0] unused
    std::vector<Vertex> out_hi_;        // [0] unused
};

// In/out/total degrees for every vertex; slot 0 of the result is unused.
std::vector<VertexDegrees> degrees(const JacoTypeGraph& g);

JaconianSet jaconian_set(const JacoTypeGraph& g);

// Deterministic serialization of the digraph. Dot emits one "vI -> vJ" line
// per arc; edge-list emits "i j" lines; json carries order, terms, arcs and
// the generating spec.
std::string export_graph(const JacoTypeGraph& g, GraphFormat format);

}  // namespace jaco
