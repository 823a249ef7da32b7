#pragma once

#include <optional>

#include "gkt/int_matrix.hpp"

namespace gkt {

/// U·M·V == D with U, V unimodular and D diagonal, d1 | d2 | ... and all d_i >= 0.
/// `v_inverse` is V⁻¹, tracked alongside the column operations.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix v_inverse;
    std::size_t rank = 0;

    /// Diagonal entries d(0,0) ... d(k-1,k-1) with k = min(rows, cols).
    IntVector diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Columns span {x : M·x = 0}. The basis is saturated (a direct summand of Z^cols).
IntMatrix kernel_basis(const IntMatrix& m);

/// Integer solution c of L·c = y, if one exists.
std::optional<IntVector> solve_in_lattice(const IntMatrix& lattice, const IntVector& y);

/// Reusable form of solve_in_lattice: one Smith decomposition, many right-hand sides.
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix& lattice);

    std::optional<IntVector> solve(const IntVector& y) const;
    bool contains(const IntVector& y) const { return solve(y).has_value(); }
    std::size_t ambient_dim() const { return rows_; }

private:
    std::size_t rows_;
    SmithDecomposition snf_;
    IntVector diag_;
};

/// True when the column lattices of `a` and `b` coincide inside Z^rows.
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

std::size_t integer_rank(const IntMatrix& m);

}  // namespace gkt
