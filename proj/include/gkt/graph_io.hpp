#pragma once

#include <stdexcept>
#include <string>

#include "gkt/graph.hpp"
#include "json.hpp"

namespace gkt {

/// Malformed or inconsistent graph document. `what()` carries the position
/// (byte offset) for JSON syntax errors and the offending field otherwise.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphDocument {
    bool is_chain = false;
    FiniteGraph graph;  // finite graphs
    GraphChain chain;   // chains
};

GraphDocument parse_graph_document(const std::string& text);
GraphDocument load_graph_document(const std::string& path);

nlohmann::ordered_json to_json(const FiniteGraph& g);
nlohmann::ordered_json to_json(const GraphChain& c);

/// Two-space indented JSON with a trailing newline.
std::string dump_graph(const FiniteGraph& g);
std::string dump_graph(const GraphChain& c);

}  // namespace gkt
