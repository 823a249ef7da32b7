#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkt {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using VertexId = std::string;
using VertexSet = std::set<VertexId>;

struct Edge {
    std::string id;
    VertexId from;
    VertexId to;

    bool is_loop() const { return from == to; }
    bool operator==(const Edge&) const = default;
};

/// Directed multigraph with a set of vertices exempt from the summation
/// relation. Vertices are kept in lexicographic order, which fixes the row and
/// column order of every matrix built from the graph. Edges are sorted by id.
class FiniteGraph {
public:
    FiniteGraph() = default;
    FiniteGraph(std::vector<VertexId> vertices, std::vector<Edge> edges, VertexSet relation_exempt = {});

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const VertexSet& relation_exempt() const { return relation_exempt_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const VertexId& v) const;
    const Edge* find_edge(const std::string& id) const;

    /// Vertices where the summation relation is imposed (S = vertices ∖ relation_exempt).
    bool in_relation_set(const VertexId& v) const { return has_vertex(v) && relation_exempt_.count(v) == 0; }
    std::vector<VertexId> relation_set() const;

    /// Edge indices leaving / entering a vertex, in edge order.
    const std::vector<std::size_t>& out_edges(std::size_t vertex) const { return out_[vertex]; }
    const std::vector<std::size_t>& in_edges(std::size_t vertex) const { return in_[vertex]; }
    std::size_t out_degree(std::size_t vertex) const { return out_[vertex].size(); }
    std::size_t in_degree(std::size_t vertex) const { return in_[vertex].size(); }

    /// Same vertices and edges, different exempt set.
    FiniteGraph with_relation_exempt(VertexSet exempt) const;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    VertexSet relation_exempt_;
    std::map<VertexId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

/// Finite prefix F₀ ⊆ F₁ ⊆ ... ⊆ F_N of an infinite graph together with the
/// set D of infinite-valence vertices. Layer edge sets are induced from the
/// prefix edge list and never stored.
class GraphChain {
public:
    GraphChain() = default;
    GraphChain(VertexSet infinite_vertices, std::vector<std::vector<VertexId>> layers, std::vector<Edge> edges);

    const VertexSet& infinite_vertices() const { return infinite_; }
    std::size_t num_layers() const { return layers_.size(); }
    const std::vector<VertexId>& layer_vertices(std::size_t n) const { return layers_.at(n); }
    const VertexSet& layer_set(std::size_t n) const { return layer_sets_.at(n); }
    const std::vector<std::vector<VertexId>>& layers() const { return layers_; }
    const std::vector<Edge>& edges() const { return prefix_.edges(); }

    /// The whole prefix as one graph (no exempt set).
    const FiniteGraph& prefix() const { return prefix_; }

    /// Layer n with induced edges and relation_exempt = Fₙ⁰ ∖ Sₙ.
    FiniteGraph layer(std::size_t n) const;

private:
    VertexSet infinite_;
    std::vector<std::vector<VertexId>> layers_;
    std::vector<VertexSet> layer_sets_;
    FiniteGraph prefix_;
};

/// Strongly connected components (Tarjan), each sorted by vertex index.
std::vector<std::vector<std::size_t>> strongly_connected_components(const FiniteGraph& g);

bool is_irreducible(const FiniteGraph& g);
bool is_cycle(const FiniteGraph& g);
bool every_cycle_has_exit(const FiniteGraph& g);

struct ToeplitzSet {
    std::vector<VertexId> members;
    /// Vertices of Fₙ⁰ ∖ D left out of Sₙ; empty whenever (a4) holds at layer n.
    std::vector<VertexId> divergence;
};

/// Sₙ = { u ∈ Fₙ⁰ ∖ D : every prefix out-edge of u lies in Fₙ¹ }.
ToeplitzSet toeplitz_s_set(const GraphChain& chain, std::size_t n);

}  // namespace gkt
