#include "gkt/conditions.hpp"

#include <algorithm>
#include <optional>

namespace gkt {

bool ConditionReport::all_passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const ConditionVerdict& v) { return v.passed; });
}

const ConditionVerdict& ConditionReport::get(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return v;
    throw GraphError("no verdict named '" + name + "'");
}

namespace {

ConditionVerdict fail(ConditionVerdict v, std::string witness) {
    v.passed = false;
    v.witness = std::move(witness);
    return v;
}

ConditionVerdict check_a1(const GraphChain& chain) {
    ConditionVerdict v{"a1", true, "", "D is contained in layer 0"};
    for (const auto& d : chain.infinite_vertices())
        if (!chain.layer_set(0).count(d)) return fail(v, "vertex " + d + " of D is not in layer 0");
    return v;
}

ConditionVerdict check_a2(const GraphChain& chain) {
    ConditionVerdict v{"a2", true, "", "every layer is irreducible and not a cycle"};
    for (std::size_t n = 0; n < chain.num_layers(); ++n) {
        FiniteGraph g = chain.layer(n);
        if (!is_irreducible(g)) return fail(v, "layer " + std::to_string(n) + " is not strongly connected");
        if (is_cycle(g)) return fail(v, "layer " + std::to_string(n) + " is a cycle");
    }
    return v;
}

ConditionVerdict check_a3(const GraphChain&) {
    return ConditionVerdict{"a3", true, "", "layer edge sets are induced by construction"};
}

ConditionVerdict check_a4(const GraphChain& chain) {
    ConditionVerdict v{"a4", true, "", "vertices outside D emit only inside their layer"};
    const FiniteGraph& p = chain.prefix();
    for (std::size_t n = 0; n < chain.num_layers(); ++n) {
        const VertexSet& layer = chain.layer_set(n);
        for (const auto& u : chain.layer_vertices(n)) {
            if (chain.infinite_vertices().count(u)) continue;
            for (std::size_t e : p.out_edges(p.index_of(u))) {
                const Edge& edge = p.edges()[e];
                if (!layer.count(edge.to)) {
                    return fail(v, "edge " + edge.id + " (" + edge.from + " -> " + edge.to + ") leaves layer " +
                                       std::to_string(n));
                }
            }
        }
    }
    return v;
}

ConditionVerdict check_a5(const GraphChain& chain) {
    ConditionVerdict v{"a5", true, "", "in-neighbours of layer n lie in layer n+1 (last layer not checkable)"};
    const FiniteGraph& p = chain.prefix();
    for (std::size_t n = 0; n + 1 < chain.num_layers(); ++n) {
        const VertexSet& next = chain.layer_set(n + 1);
        for (const auto& u : chain.layer_vertices(n)) {
            for (std::size_t e : p.in_edges(p.index_of(u))) {
                const Edge& edge = p.edges()[e];
                if (!next.count(edge.from)) {
                    return fail(v, "edge " + edge.id + " enters layer " + std::to_string(n) + " from " + edge.from +
                                       ", which is outside layer " + std::to_string(n + 1));
                }
            }
        }
    }
    return v;
}

ConditionVerdict check_a6(const GraphChain& chain) {
    ConditionVerdict v{"a6", true, "", "every D vertex emits into every new layer"};
    const FiniteGraph& p = chain.prefix();
    for (const auto& d : chain.infinite_vertices()) {
        for (std::size_t n = 0; n < chain.num_layers(); ++n) {
            const VertexSet& layer = chain.layer_set(n);
            const VertexSet* previous = n == 0 ? nullptr : &chain.layer_set(n - 1);
            bool hit = false;
            for (std::size_t e : p.out_edges(p.index_of(d))) {
                const auto& to = p.edges()[e].to;
                if (layer.count(to) && (!previous || !previous->count(to))) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return fail(v, "vertex " + d + " emits no edge into the new vertices of layer " + std::to_string(n));
        }
    }
    return v;
}

struct StarLabel {
    Element cls;
    bool loop;
    auto operator<=>(const StarLabel&) const = default;
    bool operator==(const StarLabel&) const = default;
};

}  // namespace

ConditionReport check_condition_a(const GraphChain& chain) {
    ConditionReport r;
    r.verdicts.push_back(check_a1(chain));
    r.verdicts.push_back(check_a2(chain));
    r.verdicts.push_back(check_a3(chain));
    r.verdicts.push_back(check_a4(chain));
    r.verdicts.push_back(check_a5(chain));
    r.verdicts.push_back(check_a6(chain));
    return r;
}

ConditionVerdict B2Report::verdict() const {
    ConditionVerdict v{"b2", passed, witness, ""};
    v.note = std::to_string(matches.size()) + " vertices matched";
    if (!skipped.empty()) v.note += ", " + std::to_string(skipped.size()) + " beyond the representative layer skipped";
    return v;
}

B2Report check_condition_b2(const GraphChain& chain, const FgAbelianGroup& k0,
                            const std::map<VertexId, Element>& k0_class) {
    const FiniteGraph& p = chain.prefix();
    const VertexSet& d = chain.infinite_vertices();

    // Sorted labelled out-star, or nothing if a class is unknown.
    auto star = [&](const VertexId& v) -> std::optional<std::vector<std::pair<StarLabel, std::string>>> {
        std::vector<std::pair<StarLabel, std::string>> out;
        for (std::size_t e : p.out_edges(p.index_of(v))) {
            const Edge& edge = p.edges()[e];
            auto it = k0_class.find(edge.to);
            if (it == k0_class.end()) return std::nullopt;
            out.push_back({StarLabel{k0.reduce(it->second), edge.is_loop()}, edge.id});
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    std::vector<std::pair<VertexId, std::vector<std::pair<StarLabel, std::string>>>> candidates;
    for (const auto& v : chain.layer_vertices(0)) {
        if (d.count(v)) continue;
        if (auto s = star(v)) candidates.emplace_back(v, std::move(*s));
    }

    B2Report report;
    for (const auto& u : p.vertices()) {
        if (d.count(u) || chain.layer_set(0).count(u)) continue;
        auto su = star(u);
        if (!su || !k0_class.count(u)) {
            report.skipped.push_back(u);
            continue;
        }
        // Among matching candidates prefer the longest shared name prefix, so
        // that a_i_j pairs with its own column.
        const std::pair<VertexId, std::vector<std::pair<StarLabel, std::string>>>* best = nullptr;
        std::size_t best_prefix = 0;
        for (const auto& cand : candidates) {
            const auto& sv = cand.second;
            if (sv.size() != su->size()) continue;
            bool same = true;
            for (std::size_t i = 0; i < sv.size() && same; ++i) same = sv[i].first == (*su)[i].first;
            if (!same) continue;
            auto mm = std::mismatch(u.begin(), u.end(), cand.first.begin(), cand.first.end());
            auto prefix = static_cast<std::size_t>(mm.first - u.begin());
            if (!best || prefix > best_prefix) {
                best = &cand;
                best_prefix = prefix;
            }
        }
        if (best) {
            StarMatch m{u, best->first, {}};
            for (std::size_t i = 0; i < best->second.size(); ++i) m.edge_map[(*su)[i].second] = best->second[i].second;
            report.matches.push_back(std::move(m));
        } else {
            report.unmatched.push_back(u);
            if (report.passed) report.witness = "no vertex of layer 0 outside D has an out-star matching " + u;
            report.passed = false;
        }
    }
    return report;
}

}  // namespace gkt
