#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "json.hpp"

#include "jaco/graph.hpp"

using namespace jaco;

namespace {
JacoTypeGraph j8() {
    return JacoTypeGraph::build(SequenceSpec::positive_integers(), 8);
}
}  // namespace

TEST_CASE("J_8 over a_i = i: arcs and degrees") {
    const auto g = j8();
    CHECK(g.order() == 8);
    CHECK(g.arc_count() == 16);

    // out-degree min(i, n - i), in-degree floor(j / 2)
    const auto d = degrees(g);
    for (Vertex i = 1; i <= 8; ++i) {
        CHECK(d[i].out == std::min(i, 8 - i));
        CHECK(d[i].in == i / 2);
        CHECK(d[i].total == d[i].in + d[i].out);
    }

    CHECK(g.has_arc(2, 4));
    CHECK_FALSE(g.has_arc(2, 5));
    CHECK(g.has_arc(4, 8));
    CHECK_FALSE(g.has_arc(1, 3));
    CHECK_FALSE(g.has_arc(3, 3));
    CHECK_FALSE(g.has_arc(5, 2));  // arcs only run forward
    CHECK_THROWS_AS((void)g.has_arc(0, 2), std::out_of_range);
    CHECK_THROWS_AS((void)g.has_arc(1, 9), std::out_of_range);
}

TEST_CASE("interval structure of out-neighbourhoods") {
    const std::vector<SequenceSpec> specs = {
        SequenceSpec::positive_integers(), SequenceSpec::fibonacci(),
        SequenceSpec::modulo(5), SequenceSpec::set_sequence(3),
        SequenceSpec::linear_jaco()};
    for (const auto& spec : specs) {
        const auto g = JacoTypeGraph::build(spec, 20);
        std::uint64_t arcs = 0, in_sum = 0;
        const auto d = degrees(g);
        for (Vertex i = 1; i <= 20; ++i) {
            REQUIRE(g.out_hi(i) >= i);
            REQUIRE(g.out_hi(i) <= 20);
            REQUIRE(g.out_degree(i) == g.out_hi(i) - i);
            arcs += d[i].out;
            in_sum += d[i].in;
        }
        REQUIRE(arcs == g.arc_count());
        REQUIRE(in_sum == g.arc_count());
    }
}

TEST_CASE("terms survive clipping") {
    const auto g = JacoTypeGraph::build(SequenceSpec::positive_integers(), 4);
    CHECK(g.term(4) == 4);            // the term itself is not clipped
    CHECK(g.out_hi(4) == 4);          // but the interval is
    CHECK_THROWS_AS((void)g.term(0), std::out_of_range);
    CHECK_THROWS_AS((void)g.term(5), std::out_of_range);
}

TEST_CASE("extension appends one vertex and preserves the front") {
    auto g = JacoTypeGraph::build(SequenceSpec::fibonacci(), 7);
    const auto h = g.extend();
    CHECK(h.order() == 8);
    CHECK(h.spec().kind == Family::Fibonacci);
    for (Vertex i = 1; i <= 7; ++i) CHECK(h.term(i) == g.term(i));
    CHECK(h.term(8) == 21);

    const auto direct = JacoTypeGraph::build(SequenceSpec::fibonacci(), 8);
    CHECK(h.arc_count() == direct.arc_count());
    for (Vertex i = 1; i <= 8; ++i) CHECK(h.out_hi(i) == direct.out_hi(i));

    SUBCASE("in-degrees of old vertices are stable") {
        const auto dg = degrees(g);
        const auto dh = degrees(h);
        for (Vertex i = 1; i <= 7; ++i) CHECK(dg[i].in == dh[i].in);
    }
}

TEST_CASE("explicit sequences clip against the available length") {
    const auto spec = SequenceSpec::explicit_terms({3, 0, 1});
    const auto g = JacoTypeGraph::build(spec, 3);
    CHECK(g.has_arc(1, 2));
    CHECK(g.has_arc(1, 3));
    CHECK_FALSE(g.has_arc(2, 3));
    CHECK(g.arc_count() == 2);
    // extending an exhausted explicit sequence has nothing to append
    CHECK_THROWS_AS((void)g.extend(), std::out_of_range);
    CHECK_THROWS_AS((void)JacoTypeGraph::build(spec, 4), std::out_of_range);
}

TEST_CASE("jaconian set") {
    const auto g = j8();
    const auto j = jaconian_set(g);
    CHECK(j.max_degree == 6);
    CHECK(j.vertices == std::vector<Vertex>{4});

    const auto g2 = JacoTypeGraph::build(SequenceSpec::fibonacci(), 12);
    const auto j2 = jaconian_set(g2);
    CHECK(j2.max_degree == 8);
    CHECK(j2.vertices == std::vector<Vertex>{6, 7});

    const auto g1 = JacoTypeGraph::build(SequenceSpec::positive_integers(), 1);
    CHECK(jaconian_set(g1).max_degree == 0);
    CHECK(jaconian_set(g1).vertices == std::vector<Vertex>{1});
}

TEST_CASE("underlying adjacency lists") {
    const auto adj = j8().underlying_adjacency();
    CHECK(adj[4] == std::vector<Vertex>{2, 3, 5, 6, 7, 8});
    CHECK(adj[1] == std::vector<Vertex>{2});
    for (Vertex v = 1; v <= 8; ++v) {
        REQUIRE(std::is_sorted(adj[v].begin(), adj[v].end()));
        for (Vertex w : adj[v]) {
            REQUIRE(w != v);
            const auto& back = adj[w];
            REQUIRE(std::find(back.begin(), back.end(), v) != back.end());
        }
    }
}

TEST_CASE("graph exports") {
    const auto g = JacoTypeGraph::build(SequenceSpec::positive_integers(), 3);

    SUBCASE("dot") {
        CHECK(export_graph(g, GraphFormat::Dot) ==
              "digraph J {\n"
              "  v1;\n  v2;\n  v3;\n"
              "  v1 -> v2;\n  v2 -> v3;\n"
              "}\n");
        // an isolated vertex still shows up
        const auto lone =
            JacoTypeGraph::build(SequenceSpec::explicit_terms({0}), 1);
        CHECK(export_graph(lone, GraphFormat::Dot) == "digraph J {\n  v1;\n}\n");
    }
    SUBCASE("edge list") {
        CHECK(export_graph(g, GraphFormat::EdgeList) == "1 2\n2 3\n");
    }
    SUBCASE("json round-trips the structure") {
        const auto j = nlohmann::json::parse(export_graph(g, GraphFormat::Json));
        CHECK(j["order"] == 3);
        CHECK(j["arc_count"] == 2);
        CHECK(j["arcs"] == nlohmann::json::parse("[[1,2],[2,3]]"));
        CHECK(j["terms"] == nlohmann::json::parse("[1,2,3]"));
        CHECK(j["spec"]["family"] == "positive-integers");

        const auto m = nlohmann::json::parse(export_graph(
            JacoTypeGraph::build(SequenceSpec::modulo(5), 4), GraphFormat::Json));
        CHECK(m["spec"]["k"] == 5);
    }
    SUBCASE("format parsing") {
        CHECK(parse_graph_format("dot") == GraphFormat::Dot);
        CHECK(parse_graph_format("edge-list") == GraphFormat::EdgeList);
        CHECK(parse_graph_format("json") == GraphFormat::Json);
        CHECK_THROWS_AS((void)parse_graph_format("yaml"), std::invalid_argument);
    }
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(
        (void)JacoTypeGraph::build(SequenceSpec::positive_integers(), 0),
        std::invalid_argument);
    CHECK_THROWS_AS((void)JacoTypeGraph::build(SequenceSpec::modulo(1), 3),
                    std::invalid_argument);
    // Fibonacci beyond the exact range still builds: arcs only need
    // min(i + a_i, n), which saturation preserves
    const auto big = JacoTypeGraph::build(SequenceSpec::fibonacci(), 120);
    CHECK(big.order() == 120);
    CHECK(big.out_hi(100) == 120);
}
