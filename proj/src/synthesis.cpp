#include "gkt/synthesis.hpp"

#include <map>

#include "gkt/ktheory.hpp"

namespace gkt {

namespace {

// Edge ids are "from>to.k", k counting parallel edges from 1.
class EdgeBuilder {
public:
    void add(const VertexId& from, const VertexId& to, long count = 1) {
        for (long c = 0; c < count; ++c) {
            long k = ++multiplicity_[{from, to}];
            edges_.push_back({from + ">" + to + "." + std::to_string(k), from, to});
        }
    }
    std::vector<Edge> take() { return std::move(edges_); }

private:
    std::map<std::pair<VertexId, VertexId>, long> multiplicity_;
    std::vector<Edge> edges_;
};

std::string v(std::size_t i) { return "v" + std::to_string(i); }
std::string w(std::size_t i) { return "w" + std::to_string(i); }
std::string a(std::size_t i, std::size_t j) { return "a_" + std::to_string(i) + "_" + std::to_string(j); }
std::string b(std::size_t i, std::size_t j) { return "b_" + std::to_string(i) + "_" + std::to_string(j); }

void check_torsion(const std::vector<long>& torsion) {
    for (long n : torsion)
        if (n < 2) throw SynthesisError("torsion orders must be at least 2, got " + std::to_string(n));
}

std::vector<VertexId> case_i_vertices(std::size_t ell, std::size_t k) {
    std::vector<VertexId> out;
    for (std::size_t i = 1; i <= ell; ++i) out.push_back(v(i));
    out.push_back("z");
    for (std::size_t i = 1; i <= k; ++i) out.push_back(w(i));
    return out;
}

void case_i_edges(std::size_t ell, const std::vector<long>& torsion, EdgeBuilder& eb) {
    const std::size_t k = torsion.size();
    auto to_front = [&](const VertexId& from) {
        for (std::size_t j = 1; j <= ell; ++j) eb.add(from, v(j));
        eb.add(from, "z");
    };
    for (std::size_t i = 1; i <= ell; ++i) to_front(v(i));
    if (k == 0) {
        to_front("z");
    } else {
        eb.add("z", w(1), torsion[0]);
        for (std::size_t i = 1; i < k; ++i) eb.add(w(i), w(i + 1), torsion[i]);
        to_front(w(k));
    }
    for (const auto& x : case_i_vertices(ell, k)) eb.add(x, x);
}

void check_depth(std::size_t depth) {
    if (depth < 4) throw SynthesisError("depth must be at least 4, got " + std::to_string(depth));
}

}  // namespace

std::string case_name(SynthesisCase c) {
    switch (c) {
        case SynthesisCase::i: return "i";
        case SynthesisCase::ii: return "ii";
        case SynthesisCase::iii: return "iii";
    }
    return "?";
}

FiniteGraph build_case_i(std::size_t ell, const std::vector<long>& torsion) {
    check_torsion(torsion);
    if (ell == 0 && torsion.empty()) throw SynthesisError("case (i) with l = 0 and no torsion is a single loop, a cycle");
    EdgeBuilder eb;
    case_i_edges(ell, torsion, eb);
    return FiniteGraph(case_i_vertices(ell, torsion.size()), eb.take());
}

GraphChain build_case_ii(std::size_t ell, std::size_t p, const std::vector<long>& torsion, std::size_t depth) {
    check_torsion(torsion);
    check_depth(depth);
    if (ell < 2 || p == 0 || p >= ell) throw SynthesisError("case (ii) needs 0 < p < l and l > 1");
    EdgeBuilder eb;
    case_i_edges(ell, torsion, eb);
    std::vector<VertexId> base = case_i_vertices(ell, torsion.size());
    base.push_back("u");

    const std::size_t columns = p + 1;
    for (std::size_t i = 1; i <= columns; ++i) eb.add(v(i), "u");
    std::vector<std::vector<VertexId>> layers;
    std::vector<VertexId> current = base;
    for (std::size_t j = 1; j <= depth; ++j) {
        for (std::size_t i = 1; i <= columns; ++i) {
            eb.add(a(i, j), j == 1 ? v(i) : a(i, j - 1));
            eb.add(a(i, j), a(i, j));
            eb.add(b(i, j), b(i, j), 2);
            eb.add(b(i, j), a(i, j));
            eb.add("u", a(i, j));
            eb.add("u", b(i, j));
            current.push_back(a(i, j));
            current.push_back(b(i, j));
        }
        layers.push_back(current);
    }
    return GraphChain({"u"}, std::move(layers), eb.take());
}

GraphChain build_case_iii(std::size_t ell, std::size_t p, const std::vector<long>& torsion, std::size_t depth) {
    check_torsion(torsion);
    check_depth(depth);
    if (ell < 1 || p == 0 || p > ell) throw SynthesisError("case (iii) needs 0 < p <= l and l >= 1");
    EdgeBuilder eb;
    case_i_edges(ell, torsion, eb);
    std::vector<VertexId> current = case_i_vertices(ell, torsion.size());
    VertexSet d;
    for (std::size_t i = 1; i <= p; ++i) {
        std::string ui = "u" + std::to_string(i);
        d.insert(ui);
        current.push_back(ui);
        eb.add(v(i), ui);
    }

    auto add_column_level = [&](std::size_t j) {
        for (std::size_t i = 1; i <= p; ++i) {
            eb.add("u" + std::to_string(i), b(i, j));
            eb.add(a(i, j), j == 1 ? v(i) : b(i, j - 1));
            eb.add(a(i, j), a(i, j), 2);
            eb.add(b(i, j), a(i, j));
            eb.add(b(i, j), j == 1 ? v(i) : b(i, j - 1));
            current.push_back(a(i, j));
            current.push_back(b(i, j));
        }
    };
    std::vector<std::vector<VertexId>> layers;
    add_column_level(1);
    for (std::size_t n = 0; n < depth; ++n) {
        add_column_level(n + 2);
        layers.push_back(current);
    }
    return GraphChain(std::move(d), std::move(layers), eb.take());
}

SynthesisResult synthesize(const SynthesisRequest& req) {
    if (!req.g1.is_free()) {
        throw SynthesisError("K1 must be free (torsion-free K1 is a hypothesis of the construction), got " +
                             format_group(req.g1));
    }
    if (req.g0.is_trivial() && req.g1.is_trivial()) {
        throw SynthesisError("the pair (0, 0) is not covered by the construction");
    }
    if (req.window == 0) throw SynthesisError("window must be at least 1");

    SynthesisResult out;
    for (const auto& d : req.g0.invariant_factors()) out.torsion.push_back(d.get_si());
    const std::size_t r0 = req.g0.free_rank();
    const std::size_t r1 = req.g1.free_rank();

    if (r0 == r1) {
        out.case_tag = SynthesisCase::i;
        out.ell = r0;
        out.graph = build_case_i(out.ell, out.torsion);
        KTheoryResult k = ktheory(*out.graph);
        out.k0 = k.k0;
        out.k1 = k.k1;
        const bool irreducible = is_irreducible(*out.graph);
        const bool cycle = is_cycle(*out.graph);
        ConditionVerdict a2{"a2", irreducible && !cycle, "", "graph is irreducible and not a cycle"};
        if (!irreducible) a2.witness = "graph is not strongly connected";
        else if (cycle) a2.witness = "graph is a cycle";
        out.conditions.verdicts.push_back(a2);
    } else {
        if (r0 < r1) {
            out.case_tag = SynthesisCase::ii;
            out.ell = r1 + 1;
            out.p = r1 - r0;
            out.chain = build_case_ii(out.ell, out.p, out.torsion, req.depth);
        } else {
            out.case_tag = SynthesisCase::iii;
            out.ell = r0;
            out.p = r0 - r1;
            out.chain = build_case_iii(out.ell, out.p, out.torsion, req.depth);
        }
        ChainKTheory ck = chain_ktheory(*out.chain, req.window, true);
        out.k0 = ck.k0;
        out.k1 = ck.k1;
        out.stabilized = ck.stabilized;
        out.conditions = ck.conditions;
        out.conditions.verdicts.push_back(check_condition_b2(*out.chain, ck.k0, ck.k0_classes).verdict());
    }
    out.verified = out.stabilized && out.conditions.all_passed() && out.k0.isomorphic(req.g0) &&
                   out.k1.isomorphic(req.g1);
    return out;
}

}  // namespace gkt
