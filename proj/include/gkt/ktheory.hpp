#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkt/abelian.hpp"
#include "gkt/conditions.hpp"
#include "gkt/graph.hpp"

namespace gkt {

struct KTheoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// K-theory of TO(F, S) with S = F.relation_set(); O(F) when S is everything.
struct KTheoryResult {
    FgAbelianGroup k0;  // generators are the vertices of F
    std::map<VertexId, Element> k0_class_of_vertex;
    FgAbelianGroup k1;     // free, one generator per lattice column
    IntMatrix k1_lattice;  // columns in Z^{F⁰}
};

/// One row per u ∈ S (in vertex order): e_u − Σ_{e ∈ o⁻¹(u)} e_{t(e)}.
IntMatrix relation_matrix(const FiniteGraph& f);

/// Kernel of c ↦ Σ c_u row_u, extended by zero off S.
IntMatrix k1_lattice_from_relations(const FiniteGraph& f);
/// {x : x(w) = Σ_{e∈t⁻¹(w)} x(o(e)) at every vertex, x = 0 off S}.
IntMatrix k1_lattice_direct(const FiniteGraph& f);

/// Both K₁ routes are computed and must agree; disagreement throws.
KTheoryResult ktheory(const FiniteGraph& f);
KTheoryResult ktheory_full(const FiniteGraph& f);  // ignores relation_exempt

/// Is x ∈ K₁O(F)?
bool in_k1_full(const FiniteGraph& f, const IntVector& x);

/// (∂x)_u = −Σ_{e∈t⁻¹(u)} x(o(e)) for u ∈ S^c (vertex order). Throws if x ∉ K₁O(F).
IntVector boundary_map(const FiniteGraph& f, const IntVector& x);

/// Integer matrix of ∂ restricted to a K₁O(F) lattice basis (|S^c| × basis size).
IntMatrix boundary_matrix(const FiniteGraph& f, const IntMatrix& k1_full_lattice);

/// j_F : Z^{S^c} → K₀TO(F), ε_u ↦ [u] − Σ_{e∈o⁻¹(u)} [t(e)].
struct IdealClassMap {
    std::vector<VertexId> basis;
    std::vector<Element> images;
    GroupHom hom;
};

IdealClassMap ideal_class_map(const FiniteGraph& f, const KTheoryResult& toeplitz);
IdealClassMap ideal_class_map(const FiniteGraph& f);

struct LesNode {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LesReport {
    KTheoryResult toeplitz;
    KTheoryResult full;
    std::vector<VertexId> exempt;
    IntMatrix boundary;      // ∂ on the K₁O basis
    IntMatrix ker_boundary;  // ker ∂ as vectors in Z^{F⁰}
    std::vector<LesNode> nodes;

    bool all_passed() const;
};

/// Exactness at K₁O(F), ⊕_{S^c} Z and K₀TO(F), plus agreement of the three K₁TO routes.
LesReport les_check(const FiniteGraph& f);

/// Extension by zero from F to G, checked against the K₁TO(G) lattice.
IntVector inclusion_k1(const FiniteGraph& f, const FiniteGraph& g, const IntVector& x);

/// K₁ inclusion as a hom between the lattice-coordinate groups.
GroupHom inclusion_k1_hom(const FiniteGraph& f, const KTheoryResult& kf, const FiniteGraph& g,
                          const KTheoryResult& kg);

/// [u]_F ↦ [u]_G.
GroupHom inclusion_k0(const FiniteGraph& f, const KTheoryResult& kf, const FiniteGraph& g, const KTheoryResult& kg);
GroupHom inclusion_k0(const FiniteGraph& f, const FiniteGraph& g);

struct IdealClassImage {
    Element formula;    // [ε_{u,G}] + Σ_{e ∈ o⁻¹(u) ∩ G¹∖F¹} [t(e)]
    Element composite;  // inclusion_k0(j_F[ε_{u,F}])
    bool agree = false;
    bool verified_case = true;  // false when u ∈ S_G, where the formula is not covered
};

IdealClassImage ideal_class_image(const FiniteGraph& f, const FiniteGraph& g, const VertexId& u);

struct ChainKTheory {
    FgAbelianGroup k0;
    FgAbelianGroup k1;
    bool stabilized = false;
    bool forced = false;
    std::size_t window = 2;
    std::size_t representative_layer = 0;
    std::map<VertexId, Element> k0_classes;  // vertices of the representative layer
    std::vector<KTheoryResult> layers;
    std::vector<GroupHom> k0_maps;
    std::vector<GroupHom> k1_maps;
    ConditionReport conditions;
};

/// Condition (a) must pass unless `force` is set.
ChainKTheory chain_ktheory(const GraphChain& chain, std::size_t window = 2, bool force = false);

}  // namespace gkt
