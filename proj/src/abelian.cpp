#include "gkt/abelian.hpp"

#include <algorithm>

namespace gkt {

namespace {

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup() : presentation_(std::make_shared<Presentation>()) {}

FgAbelianGroup FgAbelianGroup::cokernel(const IntMatrix& relations, std::vector<std::string> generators) {
    const std::size_t n = relations.cols();
    if (generators.empty()) generators = default_labels("g", n);
    if (generators.size() != n) throw GroupError("cokernel: generator labels do not match relation columns");

    SmithDecomposition snf = smith_normal_form(relations);
    auto pres = std::make_shared<Presentation>();
    pres->generators = std::move(generators);
    pres->relations = relations;
    pres->to_canonical = std::move(snf.v);
    pres->from_canonical = std::move(snf.v_inverse);
    pres->snf_diagonal = snf.diagonal();
    pres->snf_diagonal.resize(n, Integer(0));

    FgAbelianGroup g;
    for (std::size_t j = 0; j < n; ++j) {
        const Integer& d = pres->snf_diagonal[j];
        if (d >= 2) {
            g.invariant_factors_.push_back(d);
            g.coordinate_index_.push_back(j);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (pres->snf_diagonal[j] == 0) {
            ++g.free_rank_;
            g.coordinate_index_.push_back(j);
        }
    }
    g.presentation_ = std::move(pres);
    return g;
}

FgAbelianGroup FgAbelianGroup::from_invariants(std::size_t free_rank, const IntVector& torsion) {
    for (const auto& d : torsion)
        if (d < 2) throw GroupError("torsion orders must be at least 2, got " + d.get_str());
    const std::size_t k = torsion.size();
    IntMatrix rel(k, k + free_rank);
    for (std::size_t i = 0; i < k; ++i) rel(i, i) = torsion[i];
    std::vector<std::string> labels = default_labels("t", k);
    for (auto& l : default_labels("f", free_rank)) labels.push_back(std::move(l));
    return cokernel(rel, std::move(labels));
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank, std::vector<std::string> labels) {
    if (labels.empty()) labels = default_labels("f", rank);
    return cokernel(IntMatrix(0, rank), std::move(labels));
}

Element FgAbelianGroup::class_of(const IntVector& ambient) const {
    const Presentation& p = *presentation_;
    if (ambient.size() != p.generators.size()) throw GroupError("class_of: vector length does not match generators");
    Element e(coordinate_index_.size());
    const std::size_t torsion = invariant_factors_.size();
    for (std::size_t c = 0; c < coordinate_index_.size(); ++c) {
        const std::size_t j = coordinate_index_[c];
        Integer y = 0;
        for (std::size_t i = 0; i < ambient.size(); ++i) {
            if (ambient[i] != 0) y += ambient[i] * p.to_canonical(i, j);
        }
        if (c < torsion) {
            mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), invariant_factors_[c].get_mpz_t());
        }
        e[c] = std::move(y);
    }
    return e;
}

Element FgAbelianGroup::class_of_generator(std::size_t i) const {
    return class_of(unit_vector(num_generators(), i));
}

IntVector FgAbelianGroup::representative(const Element& e) const {
    const Presentation& p = *presentation_;
    if (e.size() != coordinate_index_.size()) throw GroupError("representative: element has wrong dimension");
    const std::size_t n = p.generators.size();
    IntVector x(n, Integer(0));
    for (std::size_t c = 0; c < coordinate_index_.size(); ++c) {
        if (e[c] == 0) continue;
        const std::size_t j = coordinate_index_[c];
        for (std::size_t i = 0; i < n; ++i) x[i] += e[c] * p.from_canonical(j, i);
    }
    return x;
}

Element FgAbelianGroup::reduce(const Element& e) const {
    if (e.size() != coordinate_index_.size()) throw GroupError("reduce: element has wrong dimension");
    Element out = e;
    for (std::size_t c = 0; c < invariant_factors_.size(); ++c)
        mpz_fdiv_r(out[c].get_mpz_t(), out[c].get_mpz_t(), invariant_factors_[c].get_mpz_t());
    return out;
}

bool FgAbelianGroup::is_zero(const Element& e) const { return is_zero_vector(reduce(e)); }

FgAbelianGroup FgAbelianGroup::quotient_by(const IntMatrix& lattice) const {
    if (lattice.rows() != num_generators()) throw GroupError("quotient_by: lattice dimension mismatch");
    return cokernel(vstack(presentation_->relations, lattice.transpose()), presentation_->generators);
}

std::string FgAbelianGroup::to_string() const { return format_group(*this); }

GroupHom::GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.num_generators() || matrix_.cols() != domain_.num_generators()) {
        throw GroupError("GroupHom: matrix shape " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " does not match generators");
    }
    const IntMatrix& rel = domain_.presentation().relations;
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        if (!is_zero_vector(codomain_.class_of(matrix_.apply(rel.row(r))))) {
            throw GroupError("GroupHom: relation " + std::to_string(r) + " of the domain is not respected");
        }
    }
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.num_generators()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain) {
    return GroupHom(domain, codomain, IntMatrix(codomain.num_generators(), domain.num_generators()));
}

Element GroupHom::apply(const Element& x) const {
    return codomain_.class_of(matrix_.apply(domain_.representative(x)));
}

IntMatrix GroupHom::preimage_of_zero() const {
    const std::size_t n = domain_.num_generators();
    const IntMatrix& rc = codomain_.presentation().relations;
    IntMatrix neg_rel_t = rc.transpose();
    for (std::size_t i = 0; i < neg_rel_t.rows(); ++i) neg_rel_t.negate_row(i);
    IntMatrix k = kernel_basis(hstack(matrix_, neg_rel_t));
    return k.select_rows(0, n);
}

GroupHom hom_compose(const GroupHom& f, const GroupHom& g) {
    if (!f.codomain().presentation().same_as(g.domain().presentation())) {
        throw GroupError("hom_compose: codomain of the first map is not the domain of the second");
    }
    return GroupHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

bool hom_is_surjective(const GroupHom& f) {
    FgAbelianGroup coker = FgAbelianGroup::cokernel(
        vstack(f.codomain().presentation().relations, f.matrix().transpose()));
    return coker.is_trivial();
}

bool hom_is_injective(const GroupHom& f) {
    IntMatrix pre = f.preimage_of_zero();
    for (std::size_t j = 0; j < pre.cols(); ++j)
        if (!is_zero_vector(f.domain().class_of(pre.col(j)))) return false;
    return true;
}

bool hom_is_isomorphism(const GroupHom& f) { return hom_is_surjective(f) && hom_is_injective(f); }

FgAbelianGroup hom_kernel(const GroupHom& f) {
    IntMatrix pre = f.preimage_of_zero();
    const IntMatrix& rd = f.domain().presentation().relations;
    // Relations among the preimage generators: c with pre·c in rowspace(rd).
    IntMatrix neg = rd.transpose();
    for (std::size_t i = 0; i < neg.rows(); ++i) neg.negate_row(i);
    IntMatrix k = kernel_basis(hstack(pre, neg));
    IntMatrix rel = k.select_rows(0, pre.cols()).transpose();
    return FgAbelianGroup::cokernel(rel);
}

ColimitResult colimit_chain(const std::vector<FgAbelianGroup>& groups, const std::vector<GroupHom>& homs,
                            std::size_t window) {
    if (window == 0) throw GroupError("colimit_chain: window must be at least 1");
    if (homs.size() + 1 != groups.size()) throw GroupError("colimit_chain: need exactly one map per step");
    if (groups.size() < window + 2) {
        throw GroupError("colimit_chain: chain of length " + std::to_string(groups.size()) +
                         " is too short for window " + std::to_string(window));
    }
    for (std::size_t n = 0; n < homs.size(); ++n) {
        if (!homs[n].domain().presentation().same_as(groups[n].presentation()) ||
            !homs[n].codomain().presentation().same_as(groups[n + 1].presentation())) {
            throw GroupError("colimit_chain: map " + std::to_string(n) + " does not connect consecutive groups");
        }
    }

    const std::size_t last = groups.size() - 1;
    const std::size_t top = last - window;  // last index with a full look-ahead
    std::vector<FgAbelianGroup> reduced;
    reduced.reserve(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        GroupHom composite = homs[n];
        for (std::size_t s = 1; s < window; ++s) composite = hom_compose(composite, homs[n + s]);
        reduced.push_back(groups[n].quotient_by(composite.preimage_of_zero()));
    }

    // Steps n -> n+1 inside the reduced range are n = 0 .. top-1; inspect the final window+1.
    const std::size_t steps_available = top;
    const std::size_t steps = std::min(steps_available, window + 1);
    bool all_iso = true;
    for (std::size_t n = top - steps; n < top; ++n) {
        GroupHom induced(reduced[n], reduced[n + 1], homs[n].matrix());
        if (!hom_is_isomorphism(induced)) {
            all_iso = false;
            break;
        }
    }
    ColimitResult out;
    out.group = reduced[top];
    out.stabilized = all_iso && steps == window + 1;
    out.representative_index = top;
    return out;
}

}  // namespace gkt
