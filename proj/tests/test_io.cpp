#include "doctest.h"
#include "gkt/graph_io.hpp"
#include "gkt/synthesis.hpp"
#include "oracles.hpp"

using namespace gkt;

TEST_SUITE("io") {

TEST_CASE("finite graph document") {
    GraphDocument d = parse_graph_document(R"({
      "vertices": ["b", "a"],
      "edges": [{"id": "x", "from": "a", "to": "b"}, {"id": "y", "from": "b", "to": "a"}],
      "relation_exempt": ["a"]
    })");
    CHECK(!d.is_chain);
    CHECK(d.graph.vertices() == std::vector<VertexId>{"a", "b"});
    CHECK(d.graph.relation_set() == std::vector<VertexId>{"b"});
}

TEST_CASE("missing exempt set means every vertex relates") {
    GraphDocument d = parse_graph_document(R"({"vertices": ["v"], "edges": [{"id": "e", "from": "v", "to": "v"}]})");
    CHECK(d.graph.relation_exempt().empty());
}

TEST_CASE("dump then parse is byte identical") {
    oracle::Gen gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        FiniteGraph g = gen.graph(5, 8, 2, true);
        std::string text = dump_graph(g);
        CHECK(text.back() == '\n');
        CHECK(dump_graph(parse_graph_document(text).graph) == text);
    }
    for (const GraphChain& c : {build_case_ii(2, 1, {}, 4), build_case_iii(1, 1, {3}, 4)}) {
        std::string text = dump_graph(c);
        GraphDocument d = parse_graph_document(text);
        REQUIRE(d.is_chain);
        CHECK(dump_graph(d.chain) == text);
        CHECK(d.chain.layers() == c.layers());
    }
}

TEST_CASE("syntax errors carry a byte offset") {
    CHECK_THROWS_WITH_AS(parse_graph_document("{\"vertices\": [\"a\",]}"), doctest::Contains("byte"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph_document(""), doctest::Contains("byte"), ParseError);
}

TEST_CASE("structural errors") {
    CHECK_THROWS_WITH_AS(parse_graph_document(R"({"vertices": ["a"]})"), doctest::Contains("edges"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_graph_document(R"({"vertices": ["a"], "edges": [{"id": "e", "from": "a", "to": "c"}]})"),
        doctest::Contains("unknown vertex"), ParseError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a"], "edges": [{"id": "e", "from": "a"}]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": "a", "edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph_document(R"([1, 2])"), ParseError);
    // The last layer must list every vertex.
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices": ["a", "b"], "edges": [], "layers": [["a"]]})"), ParseError);
    CHECK_THROWS_AS(load_graph_document("/nonexistent/graph.json"), ParseError);
}

}
