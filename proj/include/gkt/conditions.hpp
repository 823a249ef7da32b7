#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkt/abelian.hpp"
#include "gkt/graph.hpp"

namespace gkt {

struct ConditionVerdict {
    std::string name;      // "a1" ... "a6", "b2"
    bool passed = true;
    std::string witness;   // first violation, empty when passed
    std::string note;
};

struct ConditionReport {
    std::vector<ConditionVerdict> verdicts;

    bool all_passed() const;
    const ConditionVerdict& get(const std::string& name) const;
};

/// (a1) D ⊆ F₀⁰; (a2) every layer irreducible and not a cycle; (a3) induced
/// edges; (a4) non-D layer vertices emit only inside their layer; (a5)
/// in-neighbours of layer n lie in layer n+1; (a6) every D vertex emits into
/// every new layer.
ConditionReport check_condition_a(const GraphChain& chain);

/// Out-star matching u ↦ v for (b2).
struct StarMatch {
    VertexId vertex;
    VertexId matched_to;
    std::map<std::string, std::string> edge_map;  // edge of u -> edge of v
};

struct B2Report {
    bool passed = true;
    std::vector<StarMatch> matches;
    std::vector<VertexId> unmatched;
    std::vector<VertexId> skipped;  // vertices whose classes were not supplied
    std::string witness;

    ConditionVerdict verdict() const;
};

/// For each non-D vertex outside F₀⁰ with a known class (and known classes of
/// its out-neighbours), search v ∈ F₀⁰ ∖ D whose out-star is isomorphic with
/// matching classes of termini and matching loop shape.
B2Report check_condition_b2(const GraphChain& chain, const FgAbelianGroup& k0,
                            const std::map<VertexId, Element>& k0_class);

}  // namespace gkt
