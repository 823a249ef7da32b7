#include "gkt/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace gkt {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> string_array(const json& doc, const char* field) {
    if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
    const json& a = doc.at(field);
    if (!a.is_array()) throw ParseError(std::string("field '") + field + "' must be an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_string()) {
            throw ParseError(std::string("field '") + field + "' entry " + std::to_string(i) + " is not a string");
        }
        out.push_back(a[i].get<std::string>());
    }
    return out;
}

std::vector<Edge> edge_array(const json& doc) {
    if (!doc.contains("edges")) throw ParseError("missing field 'edges'");
    const json& a = doc.at("edges");
    if (!a.is_array()) throw ParseError("field 'edges' must be an array");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const json& e = a[i];
        auto where = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) throw ParseError(where + " is not an object");
        for (const char* key : {"id", "from", "to"}) {
            if (!e.contains(key) || !e.at(key).is_string()) {
                throw ParseError(where + " needs string field '" + key + "'");
            }
        }
        out.push_back({e.at("id").get<std::string>(), e.at("from").get<std::string>(), e.at("to").get<std::string>()});
    }
    return out;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json a = ordered_json::array();
    for (const auto& e : edges) {
        ordered_json o;
        o["id"] = e.id;
        o["from"] = e.from;
        o["to"] = e.to;
        a.push_back(std::move(o));
    }
    return a;
}

}  // namespace

GraphDocument parse_graph_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");

    GraphDocument out;
    auto vertices = string_array(doc, "vertices");
    auto edges = edge_array(doc);
    try {
        if (doc.contains("layers")) {
            out.is_chain = true;
            auto d = doc.contains("infinite_vertices") ? string_array(doc, "infinite_vertices")
                                                        : std::vector<std::string>{};
            const json& layers = doc.at("layers");
            if (!layers.is_array()) throw ParseError("field 'layers' must be an array");
            std::vector<std::vector<VertexId>> parsed;
            for (std::size_t n = 0; n < layers.size(); ++n) {
                if (!layers[n].is_array()) throw ParseError("layers[" + std::to_string(n) + "] must be an array");
                std::vector<VertexId> layer;
                for (const auto& v : layers[n]) {
                    if (!v.is_string()) throw ParseError("layers[" + std::to_string(n) + "] holds a non-string");
                    layer.push_back(v.get<std::string>());
                }
                parsed.push_back(std::move(layer));
            }
            if (parsed.empty()) throw ParseError("field 'layers' is empty");
            VertexSet all(vertices.begin(), vertices.end());
            if (all.size() != vertices.size()) throw ParseError("field 'vertices' lists a vertex twice");
            VertexSet last(parsed.back().begin(), parsed.back().end());
            if (all != last) throw ParseError("the last layer must list exactly the chain's vertices");
            out.chain = GraphChain(VertexSet(d.begin(), d.end()), std::move(parsed), std::move(edges));
        } else {
            auto exempt = doc.contains("relation_exempt") ? string_array(doc, "relation_exempt")
                                                          : std::vector<std::string>{};
            out.graph = FiniteGraph(std::move(vertices), std::move(edges), VertexSet(exempt.begin(), exempt.end()));
        }
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
    return out;
}

GraphDocument load_graph_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_document(buf.str());
}

ordered_json to_json(const FiniteGraph& g) {
    ordered_json o;
    o["vertices"] = g.vertices();
    o["edges"] = edges_json(g.edges());
    o["relation_exempt"] = std::vector<std::string>(g.relation_exempt().begin(), g.relation_exempt().end());
    return o;
}

ordered_json to_json(const GraphChain& c) {
    ordered_json o;
    o["vertices"] = c.prefix().vertices();
    o["edges"] = edges_json(c.edges());
    o["infinite_vertices"] = std::vector<std::string>(c.infinite_vertices().begin(), c.infinite_vertices().end());
    o["layers"] = c.layers();
    return o;
}

std::string dump_graph(const FiniteGraph& g) { return to_json(g).dump(2) + "\n"; }
std::string dump_graph(const GraphChain& c) { return to_json(c).dump(2) + "\n"; }

}  // namespace gkt
