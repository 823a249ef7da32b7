#include "gkt/family.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "gkt/straighten.hpp"

namespace gkt {

namespace {

struct Worst {
    ConditionOResidual& r;
    void note(const std::string& rel, const std::string& where, double v) {
        double& slot = r.per_relation[rel];
        slot = std::max(slot, v);
        if (r.where.empty() || v > r.worst) {
            r.worst = v;
            r.where = rel + " at " + where;
        }
    }
};

const MatField& element(const Family& c, const std::string& id) {
    auto it = c.find(id);
    if (it == c.end()) throw LabError("family has no element for edge " + id);
    return it->second;
}

MatField zero_like(const MatField& x) { return MatField(x.grid_size(), x.fiber_dim()); }

MatField identity_like(const MatField& x) {
    return MatField::constant(x.grid_size(), Matrix::Identity(x.fiber_dim(), x.fiber_dim()));
}

std::optional<MatField> sample(const FiniteGraph& g, const Family& c) {
    for (const auto& e : g.edges()) return element(c, e.id);
    return std::nullopt;
}

// Orthogonal ranges of partial isometry-like fields, summed.
MatField range_sum(const std::vector<const MatField*>& xs, const MatField& like) {
    MatField s = zero_like(like);
    for (const MatField* x : xs) s += *x * x->adjoint();
    return s;
}

std::size_t projection_rank(const Matrix& p) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig((p + p.adjoint()) / 2.0);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
        if (eig.eigenvalues()(i) > 0.5) ++r;
    return r;
}

// Partial isometry d with dd* = S and d*d = T, the polar part of S·T.
Matrix aligning_isometry(const Matrix& s, const Matrix& t, const std::string& edge) {
    Eigen::JacobiSVD<Matrix> svd(s * t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const std::size_t rs = projection_rank(s), rt = projection_rank(t);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 0.5) ++k;
    if (rs != rt || k != rs) {
        throw LabError("straighten_family: rank mismatch at edge " + edge + " (source " + std::to_string(rs) +
                       ", target " + std::to_string(rt) + ", aligned " + std::to_string(k) + ")");
    }
    const auto kk = static_cast<Eigen::Index>(k);
    return svd.matrixU().leftCols(kk) * svd.matrixV().leftCols(kk).adjoint();
}

MatField aligning_isometry(const MatField& s, const MatField& t, const std::string& edge) {
    MatField d = s;
    for (std::size_t p = 0; p < s.num_points(); ++p) d[p] = aligning_isometry(s[p], t[p], edge);
    return d;
}

}  // namespace

ConditionOResidual condition_o_residual(const FiniteGraph& g, const VertexSet& d, const Family& c) {
    ConditionOResidual r;
    for (const char* rel : {"o1", "o2", "o3", "o4", "o5", "o6"}) r.per_relation[rel] = 0.0;
    auto like = sample(g, c);
    if (!like) return r;
    Worst w{r};

    auto out_elements = [&](std::size_t u) {
        std::vector<const MatField*> xs;
        for (std::size_t e : g.out_edges(u)) xs.push_back(&element(c, g.edges()[e].id));
        return xs;
    };

    std::vector<MatField> proj;
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        if (g.in_degree(u) > 0) {
            const MatField& e0 = element(c, g.edges()[g.in_edges(u).front()].id);
            proj.push_back(e0.adjoint() * e0);
        } else {
            proj.push_back(range_sum(out_elements(u), *like));
        }
    }

    for (const auto& e : g.edges()) w.note("o1", e.id, element(c, e.id).partial_isometry_defect());
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        const MatField& p = proj[u];
        w.note("o1", g.vertices()[u], std::max((p * p - p).norm(), (p - p.adjoint()).norm()));
        for (std::size_t v = u + 1; v < g.num_vertices(); ++v)
            w.note("o2", g.vertices()[u] + "," + g.vertices()[v], (p * proj[v]).norm());
    }
    for (const auto& e : g.edges()) {
        const MatField& x = element(c, e.id);
        w.note("o3", e.id, (x.adjoint() * x - proj[g.index_of(e.to)]).norm());
        if (d.count(e.from)) w.note("o4", e.id, (proj[g.index_of(e.from)] * x - x).norm());
    }
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        const auto& outs = g.out_edges(u);
        if (d.count(g.vertices()[u])) {
            for (std::size_t i = 0; i < outs.size(); ++i)
                for (std::size_t j = i + 1; j < outs.size(); ++j) {
                    const Edge& e = g.edges()[outs[i]];
                    const Edge& f = g.edges()[outs[j]];
                    w.note("o5", e.id + "," + f.id, (element(c, e.id).adjoint() * element(c, f.id)).norm());
                }
        } else if (!outs.empty()) {
            w.note("o6", g.vertices()[u], (proj[u] - range_sum(out_elements(u), *like)).norm());
        }
    }
    return r;
}

FamilyResult straighten_family(const FiniteGraph& f, const FiniteGraph& g, const VertexSet& d, const Family& c,
                               double tol) {
    if (tol > kMaxFamilyTolerance) throw LabError("straighten_family: tolerance above " + std::to_string(kMaxFamilyTolerance));
    for (const auto& v : f.vertices())
        if (!g.has_vertex(v)) throw LabError("straighten_family: vertex " + v + " of F is not in G");
    for (const auto& e : f.edges()) {
        const Edge* h = g.find_edge(e.id);
        if (!h || h->from != e.from || h->to != e.to) throw LabError("straighten_family: edge " + e.id + " of F is not in G");
    }
    for (const auto& v : d)
        if (!f.has_vertex(v)) throw LabError("straighten_family: D vertex " + v + " is not in F");
    for (const auto& e : g.edges()) {
        element(c, e.id);
        const bool in_f = f.find_edge(e.id) != nullptr;
        if (!in_f && f.has_vertex(e.from) && !d.count(e.from)) {
            throw LabError("straighten_family: (d1) fails, edge " + e.id + " leaves F outside D");
        }
        if (!in_f && f.has_vertex(e.from) && f.has_vertex(e.to)) {
            throw LabError("straighten_family: (d2) fails, edge " + e.id + " joins vertices of F");
        }
    }
    auto like = sample(g, c);
    if (!like) return FamilyResult{c, 0.0, 0.0, 0.0, 0.0, 0.0};

    Family cf;
    for (const auto& e : f.edges()) cf[e.id] = element(c, e.id);
    ConditionOResidual d3 = condition_o_residual(f, d, cf);
    if (d3.worst > kExactTolerance) throw LabError("straighten_family: (d3) fails, " + d3.where);

    // ξ(u), p and q(u) from the F part.
    std::map<VertexId, MatField> xi, q;
    MatField p = zero_like(*like);
    for (std::size_t u = 0; u < f.num_vertices(); ++u) {
        const VertexId& v = f.vertices()[u];
        MatField x = zero_like(*like);
        if (f.in_degree(u) > 0) {
            const MatField& e0 = element(c, f.edges()[f.in_edges(u).front()].id);
            x = e0.adjoint() * e0;
        }
        p += x;
        xi[v] = std::move(x);
        if (d.count(v)) {
            MatField s = zero_like(*like);
            for (std::size_t e : f.out_edges(u)) s += element(c, f.edges()[e].id) * element(c, f.edges()[e].id).adjoint();
            q[v] = std::move(s);
        }
    }
    const MatField one_minus_p = identity_like(*like) - p;

    std::vector<const Edge*> plain, from_d;
    for (const auto& e : g.edges()) {
        if (f.find_edge(e.id)) continue;
        (d.count(e.from) ? from_d : plain).push_back(&e);
    }

    auto d4_residual = [&](const Family& fam) {
        double worst = 0.0;
        for (const auto* list : {&plain, &from_d}) {
            for (const Edge* e : *list) {
                const MatField& x = element(fam, e->id);
                MatField target = d.count(e->from)       ? (xi[e->from] - q[e->from]) * x * one_minus_p
                                  : f.has_vertex(e->to) ? one_minus_p * x * xi[e->to]
                                                        : one_minus_p * x * one_minus_p;
                worst = std::max(worst, (x - target).norm());
            }
        }
        return worst;
    };
    double d4 = d4_residual(c);
    if (d4 > kExactTolerance) throw LabError("straighten_family: (d4) fails, block residual " + std::to_string(d4));

    FamilyResult out;
    out.input_residual = condition_o_residual(g, d, c).worst;
    if (out.input_residual > tol) {
        throw LabError("straighten_family: (d5) fails, condition (O) defect " + std::to_string(out.input_residual) +
                       " exceeds tolerance " + std::to_string(tol));
    }

    // Sequential straightening with pairwise orthogonal final projections.
    Family b;
    auto straighten_list = [&](const std::vector<const Edge*>& edges) {
        MatField used = zero_like(*like);
        for (const Edge* e : edges) {
            MatField y = straighten((identity_like(*like) - used) * element(c, e->id));
            used += y * y.adjoint();
            b[e->id] = std::move(y);
        }
    };
    straighten_list(plain);
    std::map<VertexId, std::vector<const Edge*>> by_source;
    for (const Edge* e : from_d) by_source[e->from].push_back(e);
    for (const auto& [u, edges] : by_source) straighten_list(edges);

    std::map<VertexId, MatField> b_vertex;
    for (std::size_t u = 0; u < g.num_vertices(); ++u) {
        const VertexId& v = g.vertices()[u];
        if (f.has_vertex(v)) continue;
        MatField s = zero_like(*like);
        for (std::size_t e : g.out_edges(u)) s += b[g.edges()[e].id] * b[g.edges()[e].id].adjoint();
        b_vertex[v] = std::move(s);
    }

    for (const auto& e : f.edges()) out.a[e.id] = element(c, e.id);
    for (const auto& [id, be] : b) {
        const Edge* e = g.find_edge(id);
        const MatField& t = f.has_vertex(e->to) ? xi[e->to] : b_vertex[e->to];
        out.a[id] = be * aligning_isometry(be.adjoint() * be, t, id);
    }

    out.residual = condition_o_residual(g, d, out.a).worst;
    out.d4_residual = d4_residual(out.a);
    for (const auto& e : g.edges()) {
        MatField diff = out.a[e.id] - element(c, e.id);
        out.max_change = std::max(out.max_change, diff.norm());
        out.j_change = std::max(out.j_change, diff.j_residual());
    }
    return out;
}

FamilyExample family_example(int which) {
    constexpr std::size_t m = 4, grid = 4;
    const std::vector<double> rho = ramp_profile(grid);
    FamilyExample ex;
    const double th = 0.3;
    Matrix rot = Matrix::Zero(m, m);
    rot(0, 0) = std::cos(th);
    rot(0, 1) = -std::sin(th);
    rot(1, 0) = std::sin(th);
    rot(1, 1) = std::cos(th);
    Edge loop{"v>v.1", "v", "v"};

    switch (which) {
        case 1: {
            ex.name = "identity";
            ex.f = FiniteGraph({"v"}, {loop});
            ex.g = ex.f;
            ex.c[loop.id] = MatField::constant(grid, rot);
            break;
        }
        case 2: {
            ex.name = "two-loops";
            Edge e1{"v>v.1", "v", "v"}, e2{"v>v.2", "v", "v"};
            ex.g = FiniteGraph({"v"}, {e1, e2});
            // The nearest finite-dimensional stand-ins for isometry halves.
            Matrix s1 = matrix_unit(m, 1, 1) + matrix_unit(m, 3, 2);
            Matrix s2 = matrix_unit(m, 2, 1) + matrix_unit(m, 4, 2);
            MatField c1 = MatField::constant(grid, s1), c2 = MatField::constant(grid, s2);
            for (std::size_t s = 0; s <= grid; ++s) {
                c1[s] += 1e-3 * rho[s] * matrix_unit(m, 1, 2);
                c2[s] += 1e-3 * rho[s] * matrix_unit(m, 2, 2);
            }
            ex.c[e1.id] = c1;
            ex.c[e2.id] = c2;
            break;
        }
        case 3: {
            ex.name = "source";
            Edge in{"w>v.1", "w", "v"};
            ex.f = FiniteGraph({"v"}, {loop});
            ex.g = FiniteGraph({"v", "w"}, {loop, in});
            ex.c[loop.id] = MatField::constant(grid, rot);
            // Maps the range of ξ(v) = E11 + E22 into its complement, slightly off.
            MatField x = MatField::constant(grid, matrix_unit(m, 3, 1) + matrix_unit(m, 4, 2));
            for (std::size_t s = 0; s <= grid; ++s)
                x[s] += 1e-3 * rho[s] * (matrix_unit(m, 3, 2) + 0.5 * matrix_unit(m, 4, 1) + matrix_unit(m, 3, 1));
            ex.c[in.id] = x;
            break;
        }
        default:
            throw LabError("family_example: examples are numbered 1 to 3");
    }
    return ex;
}

}  // namespace gkt
