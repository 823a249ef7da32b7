#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkt/abelian.hpp"
#include "gkt/conditions.hpp"
#include "gkt/graph.hpp"

namespace gkt {

struct SynthesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite graph with vertices v1..vℓ, z, w1..wk; relation set is everything.
FiniteGraph build_case_i(std::size_t ell, const std::vector<long>& torsion);

/// Chain with D = {u}; 0 < p < ℓ, ℓ > 1. `depth` is the number of layers.
GraphChain build_case_ii(std::size_t ell, std::size_t p, const std::vector<long>& torsion, std::size_t depth);

/// Chain with D = {u1..up}; 0 < p ≤ ℓ, ℓ ≥ 1.
GraphChain build_case_iii(std::size_t ell, std::size_t p, const std::vector<long>& torsion, std::size_t depth);

struct SynthesisRequest {
    FgAbelianGroup g0;
    FgAbelianGroup g1;
    std::size_t depth = 6;
    std::size_t window = 2;
};

enum class SynthesisCase { i, ii, iii };

std::string case_name(SynthesisCase c);

struct SynthesisResult {
    SynthesisCase case_tag = SynthesisCase::i;
    std::size_t ell = 0;
    std::size_t p = 0;
    std::vector<long> torsion;

    std::optional<FiniteGraph> graph;
    std::optional<GraphChain> chain;

    FgAbelianGroup k0;
    FgAbelianGroup k1;
    bool stabilized = true;
    ConditionReport conditions;
    bool verified = false;
};

/// Builds the graph for (g0, g1) and verifies its K-theory and conditions.
SynthesisResult synthesize(const SynthesisRequest& req);

}  // namespace gkt
