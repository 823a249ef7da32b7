#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkt/int_matrix.hpp"
#include "gkt/smith.hpp"

namespace gkt {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of a group in canonical coordinates: one entry per invariant
/// factor (reduced into [0, d)), followed by one entry per free summand.
using Element = IntVector;

/// Generators, relations and the change of basis to canonical form.
/// The group is Z^generators / rowspace(relations).
struct Presentation {
    std::vector<std::string> generators;
    IntMatrix relations;
    IntMatrix to_canonical;    // V: canonical coordinates of x are x·V
    IntMatrix from_canonical;  // V⁻¹
    IntVector snf_diagonal;    // padded with zeros to generators.size()

    bool same_as(const Presentation& other) const {
        return generators == other.generators && relations == other.relations;
    }
};

/// Finitely generated abelian group Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk with
/// d1 | d2 | ... | dk, each di >= 2. Every group carries a presentation; groups
/// built from invariants get the standard one.
class FgAbelianGroup {
public:
    FgAbelianGroup();

    static FgAbelianGroup from_invariants(std::size_t free_rank, const IntVector& torsion);
    static FgAbelianGroup free(std::size_t rank, std::vector<std::string> labels = {});
    static FgAbelianGroup trivial() { return FgAbelianGroup(); }

    /// Z^generators / rowspace(relations); relations has one row per relation.
    static FgAbelianGroup cokernel(const IntMatrix& relations, std::vector<std::string> generators = {});

    std::size_t free_rank() const { return free_rank_; }
    const IntVector& invariant_factors() const { return invariant_factors_; }
    bool is_trivial() const { return free_rank_ == 0 && invariant_factors_.empty(); }
    bool is_free() const { return invariant_factors_.empty(); }

    const Presentation& presentation() const { return *presentation_; }
    std::size_t num_generators() const { return presentation_->generators.size(); }
    std::size_t canonical_dim() const { return invariant_factors_.size() + free_rank_; }

    /// Class of an ambient vector (coefficients on the presentation generators).
    Element class_of(const IntVector& ambient) const;
    Element class_of_generator(std::size_t i) const;
    /// Ambient vector representing a canonical element.
    IntVector representative(const Element& e) const;
    bool is_zero(const Element& e) const;
    Element reduce(const Element& e) const;

    /// Same group with additional relations (columns of `lattice` are ambient vectors).
    FgAbelianGroup quotient_by(const IntMatrix& lattice) const;

    bool isomorphic(const FgAbelianGroup& other) const {
        return free_rank_ == other.free_rank_ && invariant_factors_ == other.invariant_factors_;
    }

    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    IntVector invariant_factors_;
    std::shared_ptr<const Presentation> presentation_;
    // Positions of canonical coordinates inside x·V, plus the torsion moduli.
    std::vector<std::size_t> coordinate_index_;
};

/// Homomorphism given on presentation generators: column j of `matrix` is the
/// image of domain generator j, written in codomain generators.
class GroupHom {
public:
    GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix);

    static GroupHom identity(const FgAbelianGroup& g);
    static GroupHom zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain);

    const FgAbelianGroup& domain() const { return domain_; }
    const FgAbelianGroup& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    Element apply(const Element& x) const;
    IntVector apply_ambient(const IntVector& x) const { return matrix_.apply(x); }

    /// Ambient generators (columns) of {x : f(x) lies in the codomain relation lattice}.
    IntMatrix preimage_of_zero() const;

private:
    FgAbelianGroup domain_;
    FgAbelianGroup codomain_;
    IntMatrix matrix_;
};

/// g ∘ f. Requires f.codomain() and g.domain() to share a presentation.
GroupHom hom_compose(const GroupHom& f, const GroupHom& g);
bool hom_is_surjective(const GroupHom& f);
bool hom_is_injective(const GroupHom& f);
bool hom_is_isomorphism(const GroupHom& f);
/// Canonical-coordinate invariants of ker f as a group.
FgAbelianGroup hom_kernel(const GroupHom& f);

struct ColimitResult {
    FgAbelianGroup group;
    bool stabilized = false;
    std::size_t representative_index = 0;  // index n of the reduced group returned
};

/// Direct limit of groups[0] → groups[1] → ... detected by stabilization of the
/// reduced groups Gₙ / ker(Gₙ → Gₙ₊window).
ColimitResult colimit_chain(const std::vector<FgAbelianGroup>& groups, const std::vector<GroupHom>& homs,
                            std::size_t window);

FgAbelianGroup parse_group_expr(const std::string& text);
std::string format_group(const FgAbelianGroup& g);

}  // namespace gkt
