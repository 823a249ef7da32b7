#include "gkt/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkt {

namespace {

// Working state of the reduction: A = U·M·V is maintained after every step.
struct Reducer {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;

    explicit Reducer(const IntMatrix& m)
        : a(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t k) {
        a.swap_rows(i, k);
        u.swap_rows(i, k);
    }
    void swap_cols(std::size_t j, std::size_t k) {
        a.swap_cols(j, k);
        v.swap_cols(j, k);
        v_inv.swap_rows(j, k);
    }
    // row_target += q * row_source
    void add_row(std::size_t target, std::size_t source, const Integer& q) {
        a.add_row_multiple(target, source, q);
        u.add_row_multiple(target, source, q);
    }
    // col_target += q * col_source; the inverse update is row_source -= q * row_target
    void add_col(std::size_t target, std::size_t source, const Integer& q) {
        a.add_col_multiple(target, source, q);
        v.add_col_multiple(target, source, q);
        v_inv.add_row_multiple(source, target, -q);
    }
    void negate_row(std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
    }
};

bool find_min_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (x == 0) continue;
            if (!found || abs(x) < best) {
                best = abs(x);
                pi = i;
                pj = j;
                found = true;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

// Clears column t below and row t right of the pivot, keeping |pivot| minimal.
// Returns false if a smaller remainder was moved into the pivot position and
// another pass is needed.
bool clear_column(Reducer& r, std::size_t t) {
    const IntMatrix& a = r.a;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        r.add_row(i, t, -q);
    }
    std::size_t best = t;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) != 0 && (best == t || abs(a(i, t)) < abs(a(best, t)))) best = i;
    }
    if (best == t) return true;
    r.swap_rows(t, best);
    return false;
}

bool clear_row(Reducer& r, std::size_t t) {
    const IntMatrix& a = r.a;
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        r.add_col(j, t, -q);
    }
    std::size_t best = t;
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) != 0 && (best == t || abs(a(t, j)) < abs(a(t, best)))) best = j;
    }
    if (best == t) return true;
    r.swap_cols(t, best);
    return false;
}

}  // namespace

IntVector SmithDecomposition::diagonal() const {
    const std::size_t k = std::min(d.rows(), d.cols());
    IntVector out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Reducer r(m);
    const std::size_t k = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_min_pivot(r.a, t, pi, pj)) break;
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        for (;;) {
            if (!clear_column(r, t)) continue;
            if (!clear_row(r, t)) continue;
            // Row and column clear; enforce divisibility of the remaining block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < r.a.rows() && divisible; ++i) {
                for (std::size_t j = t + 1; j < r.a.cols(); ++j) {
                    if (r.a(i, j) != 0 && !mpz_divisible_p(r.a(i, j).get_mpz_t(), r.a(t, t).get_mpz_t())) {
                        r.add_row(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }
        if (r.a(t, t) < 0) r.negate_row(t);
        ++rank;
    }
    SmithDecomposition out;
    out.u = std::move(r.u);
    out.d = std::move(r.a);
    out.v = std::move(r.v);
    out.v_inverse = std::move(r.v_inv);
    out.rank = rank;
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    const std::size_t n = m.cols();
    return snf.v.select_columns(snf.rank, n - snf.rank);
}

std::size_t integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

LatticeSolver::LatticeSolver(const IntMatrix& lattice)
    : rows_(lattice.rows()), snf_(smith_normal_form(lattice)), diag_(snf_.diagonal()) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& y) const {
    if (y.size() != rows_) throw std::invalid_argument("LatticeSolver::solve: dimension mismatch");
    IntVector uy = snf_.u.apply(y);
    const std::size_t cols = snf_.v.rows();
    IntVector z(cols, Integer(0));
    for (std::size_t i = 0; i < uy.size(); ++i) {
        if (i < snf_.rank) {
            if (!mpz_divisible_p(uy[i].get_mpz_t(), diag_[i].get_mpz_t())) return std::nullopt;
            z[i] = uy[i] / diag_[i];
        } else if (uy[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.v.apply(z);
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& lattice, const IntVector& y) {
    return LatticeSolver(lattice).solve(y);
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return false;
    LatticeSolver in_a(a);
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!in_a.contains(b.col(j))) return false;
    LatticeSolver in_b(b);
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!in_b.contains(a.col(j))) return false;
    return true;
}

}  // namespace gkt
