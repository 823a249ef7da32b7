#include "gkt/graph.hpp"

#include <algorithm>
#include <functional>

namespace gkt {

FiniteGraph::FiniteGraph(std::vector<VertexId> vertices, std::vector<Edge> edges, VertexSet relation_exempt)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), relation_exempt_(std::move(relation_exempt)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], i).second) throw GraphError("duplicate vertex '" + vertices_[i] + "'");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (e > 0 && edges_[e - 1].id == edge.id) throw GraphError("duplicate edge id '" + edge.id + "'");
        auto from = index_.find(edge.from);
        auto to = index_.find(edge.to);
        if (from == index_.end()) throw GraphError("edge '" + edge.id + "' leaves unknown vertex '" + edge.from + "'");
        if (to == index_.end()) throw GraphError("edge '" + edge.id + "' enters unknown vertex '" + edge.to + "'");
        out_[from->second].push_back(e);
        in_[to->second].push_back(e);
    }
    for (const auto& v : relation_exempt_) {
        if (!index_.count(v)) throw GraphError("relation_exempt vertex '" + v + "' is not a vertex");
    }
}

std::size_t FiniteGraph::index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw GraphError("unknown vertex '" + v + "'");
    return it->second;
}

const Edge* FiniteGraph::find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
}

std::vector<VertexId> FiniteGraph::relation_set() const {
    std::vector<VertexId> out;
    for (const auto& v : vertices_)
        if (!relation_exempt_.count(v)) out.push_back(v);
    return out;
}

FiniteGraph FiniteGraph::with_relation_exempt(VertexSet exempt) const {
    return FiniteGraph(vertices_, edges_, std::move(exempt));
}

GraphChain::GraphChain(VertexSet infinite_vertices, std::vector<std::vector<VertexId>> layers,
                       std::vector<Edge> edges)
    : infinite_(std::move(infinite_vertices)), layers_(std::move(layers)) {
    if (layers_.empty()) throw GraphError("chain has no layers");
    for (auto& layer : layers_) {
        VertexSet s(layer.begin(), layer.end());
        if (s.size() != layer.size()) throw GraphError("layer lists a vertex twice");
        std::sort(layer.begin(), layer.end());
        layer_sets_.push_back(std::move(s));
    }
    for (std::size_t n = 1; n < layer_sets_.size(); ++n) {
        for (const auto& v : layer_sets_[n - 1]) {
            if (!layer_sets_[n].count(v)) {
                throw GraphError("layer " + std::to_string(n) + " drops vertex '" + v + "' of layer " +
                                 std::to_string(n - 1));
            }
        }
    }
    for (const auto& d : infinite_) {
        if (!layer_sets_.back().count(d)) throw GraphError("infinite vertex '" + d + "' is not in the prefix");
    }
    prefix_ = FiniteGraph(layers_.back(), std::move(edges));
}

FiniteGraph GraphChain::layer(std::size_t n) const {
    const VertexSet& verts = layer_sets_.at(n);
    std::vector<Edge> induced;
    for (const auto& e : prefix_.edges())
        if (verts.count(e.from) && verts.count(e.to)) induced.push_back(e);
    ToeplitzSet s = toeplitz_s_set(*this, n);
    VertexSet members(s.members.begin(), s.members.end());
    VertexSet exempt;
    for (const auto& v : verts)
        if (!members.count(v)) exempt.insert(v);
    return FiniteGraph(layers_[n], std::move(induced), std::move(exempt));
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const FiniteGraph& g) {
    const std::size_t n = g.num_vertices();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    // Iterative Tarjan: frames hold (vertex, next out-edge position).
    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& outs = g.out_edges(f.v);
            if (f.next < outs.size()) {
                std::size_t w = g.index_of(g.edges()[outs[f.next++]].to);
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    return components;
}

bool is_irreducible(const FiniteGraph& g) {
    if (g.num_vertices() == 0) throw GraphError("is_irreducible: empty graph");
    return strongly_connected_components(g).size() == 1;
}

bool is_cycle(const FiniteGraph& g) {
    if (g.num_vertices() == 0) return false;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
    return strongly_connected_components(g).size() == 1;
}

bool every_cycle_has_exit(const FiniteGraph& g) {
    // A cycle without exit is a component in which every vertex emits exactly
    // one edge (hence the component is that cycle).
    for (const auto& comp : strongly_connected_components(g)) {
        bool has_cycle = comp.size() > 1;
        if (!has_cycle) {
            for (std::size_t e : g.out_edges(comp[0]))
                if (g.edges()[e].is_loop()) has_cycle = true;
        }
        if (!has_cycle) continue;
        bool exit_found = false;
        for (std::size_t v : comp)
            if (g.out_degree(v) >= 2) exit_found = true;
        if (!exit_found) return false;
    }
    return true;
}

ToeplitzSet toeplitz_s_set(const GraphChain& chain, std::size_t n) {
    if (n >= chain.num_layers()) throw GraphError("toeplitz_s_set: layer index out of range");
    const VertexSet& layer = chain.layer_set(n);
    const FiniteGraph& prefix = chain.prefix();
    ToeplitzSet out;
    // D vertices emit infinitely many edges of E, so none of them is ever in Sₙ.
    for (const auto& v : chain.layer_vertices(n)) {
        if (chain.infinite_vertices().count(v)) continue;
        bool inside = true;
        for (std::size_t e : prefix.out_edges(prefix.index_of(v)))
            if (!layer.count(prefix.edges()[e].to)) inside = false;
        (inside ? out.members : out.divergence).push_back(v);
    }
    return out;
}

}  // namespace gkt
