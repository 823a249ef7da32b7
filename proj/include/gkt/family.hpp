#pragma once

#include <map>
#include <string>

#include "gkt/graph.hpp"
#include "gkt/matfield.hpp"

namespace gkt {

/// Edge id → element.
using Family = std::map<std::string, MatField>;

struct ConditionOResidual {
    double worst = 0.0;
    std::string where;  // relation and edge/vertex realizing the worst value
    std::map<std::string, double> per_relation;  // "o1" ... "o6"
};

/// Residuals of (o1)–(o6) for the edges of g. Vertex projections are read off
/// as e*e for an in-edge e, or Σ ee* over out-edges for a vertex without
/// in-edges. Sinks outside D carry no (o6) relation.
ConditionOResidual condition_o_residual(const FiniteGraph& g, const VertexSet& d, const Family& c);

inline constexpr double kExactTolerance = 1e-10;
inline constexpr double kMaxFamilyTolerance = 0.05;

struct FamilyResult {
    Family a;
    double residual = 0.0;    // condition (O) on the output
    double max_change = 0.0;  // max ‖a(e) − c(e)‖
    double j_change = 0.0;    // max ‖(a(e) − c(e))(G)‖
    double d4_residual = 0.0; // block conditions on the output's new edges
    double input_residual = 0.0;
};

/// Straightens c on G¹ ∖ F¹ into an exact condition-(O) family that agrees
/// with c on F¹. Throws LabError when a hypothesis fails or the aligning
/// partial isometries do not exist.
FamilyResult straighten_family(const FiniteGraph& f, const FiniteGraph& g, const VertexSet& d, const Family& c,
                               double tol);

struct FamilyExample {
    std::string name;
    FiniteGraph f;
    FiniteGraph g;
    VertexSet d;
    Family c;
    double tol = kMaxFamilyTolerance;
};

/// 1: G = F, one vertex with a loop.
/// 2: F empty, G one vertex with two loops, perturbed isometry halves.
/// 3: F one vertex with a loop, G adds a source vertex and an edge into F.
FamilyExample family_example(int which);

}  // namespace gkt
