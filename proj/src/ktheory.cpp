#include "gkt/ktheory.hpp"

#include <algorithm>

namespace gkt {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Row for u: e_u − Σ_{e∈o⁻¹(u)} e_{t(e)}.
IntVector out_relation(const FiniteGraph& f, std::size_t u) {
    IntVector row = unit_vector(f.num_vertices(), u);
    for (std::size_t e : f.out_edges(u)) row[f.index_of(f.edges()[e].to)] -= 1;
    return row;
}

// Row for w: e_w − Σ_{e∈t⁻¹(w)} e_{o(e)}.
IntVector in_relation(const FiniteGraph& f, std::size_t w) {
    IntVector row = unit_vector(f.num_vertices(), w);
    for (std::size_t e : f.in_edges(w)) row[f.index_of(f.edges()[e].from)] -= 1;
    return row;
}

std::vector<std::size_t> exempt_indices(const FiniteGraph& f) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.num_vertices(); ++i)
        if (!f.in_relation_set(f.vertices()[i])) out.push_back(i);
    return out;
}

void require_subgraph(const FiniteGraph& f, const FiniteGraph& g) {
    for (const auto& v : f.vertices())
        if (!g.has_vertex(v)) throw KTheoryError("inclusion: vertex " + v + " is missing from the larger graph");
    for (const auto& e : f.edges()) {
        const Edge* h = g.find_edge(e.id);
        if (!h || h->from != e.from || h->to != e.to) {
            throw KTheoryError("inclusion: edge " + e.id + " is missing from the larger graph");
        }
    }
    for (const auto& v : f.relation_set()) {
        if (!g.in_relation_set(v)) throw KTheoryError("inclusion: " + v + " is in S_F but not in S_G");
    }
}

IntVector extend_by_zero(const FiniteGraph& f, const FiniteGraph& g, const IntVector& x) {
    if (x.size() != f.num_vertices()) throw KTheoryError("inclusion: vector length does not match the graph");
    IntVector y = zero_vector(g.num_vertices());
    for (std::size_t i = 0; i < x.size(); ++i) y[g.index_of(f.vertices()[i])] = x[i];
    return y;
}

bool in_k1_toeplitz(const FiniteGraph& g, const IntVector& x) {
    for (std::size_t w = 0; w < g.num_vertices(); ++w) {
        Integer inflow = 0;
        for (std::size_t e : g.in_edges(w)) inflow += x[g.index_of(g.edges()[e].from)];
        if (inflow != x[w]) return false;
        if (!g.in_relation_set(g.vertices()[w]) && x[w] != 0) return false;
    }
    return true;
}

IntMatrix vertex_inclusion_matrix(const FiniteGraph& f, const FiniteGraph& g) {
    IntMatrix m(g.num_vertices(), f.num_vertices());
    for (std::size_t i = 0; i < f.num_vertices(); ++i) m(g.index_of(f.vertices()[i]), i) = 1;
    return m;
}

}  // namespace

IntMatrix relation_matrix(const FiniteGraph& f) {
    std::vector<IntVector> rows;
    for (std::size_t u = 0; u < f.num_vertices(); ++u)
        if (f.in_relation_set(f.vertices()[u])) rows.push_back(out_relation(f, u));
    return IntMatrix::from_row_vectors(rows, f.num_vertices());
}

IntMatrix k1_lattice_from_relations(const FiniteGraph& f) {
    IntMatrix r = relation_matrix(f);
    IntMatrix k = kernel_basis(r.transpose());
    IntMatrix out(f.num_vertices(), k.cols());
    std::size_t s = 0;
    for (std::size_t u = 0; u < f.num_vertices(); ++u) {
        if (!f.in_relation_set(f.vertices()[u])) continue;
        for (std::size_t j = 0; j < k.cols(); ++j) out(u, j) = k(s, j);
        ++s;
    }
    return out;
}

IntMatrix k1_lattice_direct(const FiniteGraph& f) {
    std::vector<IntVector> rows;
    for (std::size_t w = 0; w < f.num_vertices(); ++w) rows.push_back(in_relation(f, w));
    for (std::size_t w : exempt_indices(f)) rows.push_back(unit_vector(f.num_vertices(), w));
    return kernel_basis(IntMatrix::from_row_vectors(rows, f.num_vertices()));
}

KTheoryResult ktheory(const FiniteGraph& f) {
    KTheoryResult out;
    out.k0 = FgAbelianGroup::cokernel(relation_matrix(f), f.vertices());
    for (std::size_t i = 0; i < f.num_vertices(); ++i) out.k0_class_of_vertex[f.vertices()[i]] = out.k0.class_of_generator(i);

    out.k1_lattice = k1_lattice_from_relations(f);
    if (!same_column_lattice(out.k1_lattice, k1_lattice_direct(f))) {
        throw KTheoryError("ktheory: the two K1 lattice computations disagree");
    }
    out.k1 = FgAbelianGroup::free(out.k1_lattice.cols(), numbered("x", out.k1_lattice.cols()));
    return out;
}

KTheoryResult ktheory_full(const FiniteGraph& f) { return ktheory(f.with_relation_exempt({})); }

bool in_k1_full(const FiniteGraph& f, const IntVector& x) {
    if (x.size() != f.num_vertices()) return false;
    return in_k1_toeplitz(f.with_relation_exempt({}), x);
}

IntVector boundary_map(const FiniteGraph& f, const IntVector& x) {
    if (x.size() != f.num_vertices()) {
        throw KTheoryError("boundary_map: vector has " + std::to_string(x.size()) + " entries, graph has " +
                           std::to_string(f.num_vertices()) + " vertices");
    }
    if (!in_k1_full(f, x)) throw KTheoryError("boundary_map: vector is not in K1 O(F)");
    IntVector out;
    for (std::size_t u : exempt_indices(f)) {
        Integer s = 0;
        for (std::size_t e : f.in_edges(u)) s -= x[f.index_of(f.edges()[e].from)];
        out.push_back(s);
    }
    return out;
}

IntMatrix boundary_matrix(const FiniteGraph& f, const IntMatrix& k1_full_lattice) {
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < k1_full_lattice.cols(); ++j) cols.push_back(boundary_map(f, k1_full_lattice.col(j)));
    return IntMatrix::from_columns(cols, exempt_indices(f).size());
}

IdealClassMap ideal_class_map(const FiniteGraph& f, const KTheoryResult& toeplitz) {
    std::vector<std::size_t> ex = exempt_indices(f);
    std::vector<VertexId> basis;
    std::vector<IntVector> cols;
    for (std::size_t u : ex) {
        basis.push_back(f.vertices()[u]);
        cols.push_back(out_relation(f, u));
    }
    std::vector<std::string> labels;
    for (const auto& b : basis) labels.push_back("eps_" + b);
    GroupHom hom(FgAbelianGroup::free(basis.size(), labels), toeplitz.k0,
                 IntMatrix::from_columns(cols, f.num_vertices()));
    std::vector<Element> images;
    for (const auto& c : cols) images.push_back(toeplitz.k0.class_of(c));
    return IdealClassMap{std::move(basis), std::move(images), std::move(hom)};
}

IdealClassMap ideal_class_map(const FiniteGraph& f) { return ideal_class_map(f, ktheory(f)); }

bool LesReport::all_passed() const {
    return std::all_of(nodes.begin(), nodes.end(), [](const LesNode& n) { return n.passed; });
}

LesReport les_check(const FiniteGraph& f) {
    LesReport r;
    r.toeplitz = ktheory(f);
    r.full = ktheory_full(f);
    r.exempt = {};
    for (std::size_t u : exempt_indices(f)) r.exempt.push_back(f.vertices()[u]);

    IntMatrix route_a = r.toeplitz.k1_lattice;
    IntMatrix route_b = k1_lattice_direct(f);
    r.boundary = boundary_matrix(f, r.full.k1_lattice);
    r.ker_boundary = r.full.k1_lattice * kernel_basis(r.boundary);

    bool ab = same_column_lattice(route_a, route_b);
    bool ac = same_column_lattice(route_a, r.ker_boundary);
    r.nodes.push_back({"k1_routes", ab && ac,
                       "relation kernel rank " + std::to_string(route_a.cols()) + ", direct rank " +
                           std::to_string(route_b.cols()) + ", ker boundary rank " +
                           std::to_string(r.ker_boundary.cols())});

    // Exactness at K₁O(F): the image of K₁TO(F) (extension by zero is the
    // identity on Z^{F⁰}) is ker ∂.
    r.nodes.push_back({"exact_at_k1_full", ac, ac ? "" : "image of K1 TO differs from ker boundary"});

    // Exactness at ⊕_{S^c} Z: im ∂ = ker j.
    IdealClassMap j = ideal_class_map(f, r.toeplitz);
    IntMatrix ker_j = j.hom.preimage_of_zero();
    bool at_ideal = same_column_lattice(r.boundary, ker_j);
    r.nodes.push_back({"exact_at_ideal", at_ideal, at_ideal ? "" : "image of boundary differs from ker j"});

    // Exactness at K₀TO(F): im j = ker(K₀TO(F) → K₀O(F)), compared as lattices
    // of ambient vectors modulo the Toeplitz relations.
    GroupHom q(r.toeplitz.k0, r.full.k0, IntMatrix::identity(f.num_vertices()));
    IntMatrix image_j = hstack(j.hom.matrix(), r.toeplitz.k0.presentation().relations.transpose());
    bool at_k0 = same_column_lattice(q.preimage_of_zero(), image_j);
    r.nodes.push_back({"exact_at_k0_toeplitz", at_k0, at_k0 ? "" : "image of j differs from ker of the quotient map"});

    FgAbelianGroup coker_j = r.toeplitz.k0.quotient_by(j.hom.matrix());
    bool right = coker_j.isomorphic(r.full.k0) &&
                 hom_is_isomorphism(GroupHom(coker_j, r.full.k0, IntMatrix::identity(f.num_vertices())));
    r.nodes.push_back({"coker_j_is_k0_full", right,
                       "coker j = " + format_group(coker_j) + ", K0 O(F) = " + format_group(r.full.k0)});
    return r;
}

IntVector inclusion_k1(const FiniteGraph& f, const FiniteGraph& g, const IntVector& x) {
    require_subgraph(f, g);
    if (!in_k1_toeplitz(f, x)) throw KTheoryError("inclusion_k1: vector is not in the K1 TO(F) lattice");
    IntVector y = extend_by_zero(f, g, x);
    if (!in_k1_toeplitz(g, y)) {
        throw KTheoryError("inclusion_k1: extension by zero leaves the K1 TO(G) lattice");
    }
    return y;
}

GroupHom inclusion_k1_hom(const FiniteGraph& f, const KTheoryResult& kf, const FiniteGraph& g,
                          const KTheoryResult& kg) {
    LatticeSolver solver(kg.k1_lattice);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < kf.k1_lattice.cols(); ++j) {
        auto c = solver.solve(inclusion_k1(f, g, kf.k1_lattice.col(j)));
        if (!c) throw KTheoryError("inclusion_k1_hom: image not in the K1 TO(G) lattice");
        cols.push_back(std::move(*c));
    }
    return GroupHom(kf.k1, kg.k1, IntMatrix::from_columns(cols, kg.k1_lattice.cols()));
}

GroupHom inclusion_k0(const FiniteGraph& f, const KTheoryResult& kf, const FiniteGraph& g, const KTheoryResult& kg) {
    require_subgraph(f, g);
    for (const auto& u : f.relation_set()) {
        std::vector<std::string> in_f, in_g;
        for (std::size_t e : f.out_edges(f.index_of(u))) in_f.push_back(f.edges()[e].id);
        for (std::size_t e : g.out_edges(g.index_of(u))) in_g.push_back(g.edges()[e].id);
        if (in_f != in_g) throw KTheoryError("inclusion_k0: out-edges of " + u + " differ between the graphs");
    }
    return GroupHom(kf.k0, kg.k0, vertex_inclusion_matrix(f, g));
}

GroupHom inclusion_k0(const FiniteGraph& f, const FiniteGraph& g) { return inclusion_k0(f, ktheory(f), g, ktheory(g)); }

IdealClassImage ideal_class_image(const FiniteGraph& f, const FiniteGraph& g, const VertexId& u) {
    if (!f.has_vertex(u) || f.in_relation_set(u)) throw KTheoryError("ideal_class_image: " + u + " is not in S_F^c");
    KTheoryResult kf = ktheory(f);
    KTheoryResult kg = ktheory(g);
    GroupHom inc = inclusion_k0(f, kf, g, kg);

    IdealClassImage out;
    IntVector eps_f = out_relation(f, f.index_of(u));
    out.composite = kg.k0.class_of(inc.apply_ambient(eps_f));

    const std::size_t ug = g.index_of(u);
    IntVector formula;
    if (!g.in_relation_set(u)) {
        IdealClassMap jg = ideal_class_map(g, kg);
        auto pos = std::find(jg.basis.begin(), jg.basis.end(), u) - jg.basis.begin();
        formula = jg.hom.matrix().col(static_cast<std::size_t>(pos));
    } else {
        out.verified_case = false;
        formula = out_relation(g, ug);
    }
    for (std::size_t e : g.out_edges(ug)) {
        const Edge& edge = g.edges()[e];
        if (!f.find_edge(edge.id)) formula[g.index_of(edge.to)] += 1;
    }
    out.formula = kg.k0.class_of(formula);
    out.agree = out.formula == out.composite;
    return out;
}

ChainKTheory chain_ktheory(const GraphChain& chain, std::size_t window, bool force) {
    ChainKTheory out;
    out.window = window;
    out.forced = force;
    out.conditions = check_condition_a(chain);
    if (!force && !out.conditions.all_passed()) {
        for (const auto& v : out.conditions.verdicts)
            if (!v.passed) throw KTheoryError("condition " + v.name + " fails: " + v.witness);
    }

    std::vector<FiniteGraph> graphs;
    for (std::size_t n = 0; n < chain.num_layers(); ++n) {
        graphs.push_back(chain.layer(n));
        out.layers.push_back(ktheory(graphs.back()));
    }
    std::vector<FgAbelianGroup> k0s, k1s;
    for (const auto& k : out.layers) {
        k0s.push_back(k.k0);
        k1s.push_back(k.k1);
    }
    for (std::size_t n = 0; n + 1 < graphs.size(); ++n) {
        out.k0_maps.push_back(inclusion_k0(graphs[n], out.layers[n], graphs[n + 1], out.layers[n + 1]));
        out.k1_maps.push_back(inclusion_k1_hom(graphs[n], out.layers[n], graphs[n + 1], out.layers[n + 1]));
    }

    ColimitResult c0 = colimit_chain(k0s, out.k0_maps, window);
    ColimitResult c1 = colimit_chain(k1s, out.k1_maps, window);
    if (!c1.group.is_free()) throw KTheoryError("chain_ktheory: K1 colimit has torsion");
    out.k0 = c0.group;
    out.k1 = c1.group;
    out.stabilized = c0.stabilized && c1.stabilized;
    out.representative_layer = c0.representative_index;
    const FiniteGraph& rep = graphs[out.representative_layer];
    for (std::size_t i = 0; i < rep.num_vertices(); ++i) out.k0_classes[rep.vertices()[i]] = out.k0.class_of_generator(i);
    return out;
}

}  // namespace gkt
