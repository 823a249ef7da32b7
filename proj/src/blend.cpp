#include "gkt/blend.hpp"

#include <cmath>

namespace gkt {

double DefectReport::defect(const std::string& name) const {
    for (const auto& [n, v] : defects)
        if (n == name) return v;
    throw LabError("no defect named '" + name + "'");
}

namespace {

MatField sqrt_complement(const MatField& h) {
    MatField k = h;
    for (std::size_t s = 0; s < h.num_points(); ++s) {
        Eigen::SelfAdjointEigenSolver<Matrix> eig((h[s] + h[s].adjoint()) / 2.0);
        Eigen::VectorXcd f(eig.eigenvalues().size());
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            double l = eig.eigenvalues()(i);
            f(i) = std::sqrt(std::max(0.0, 1.0 - l * l));
        }
        k[s] = eig.eigenvectors() * f.asDiagonal() * eig.eigenvectors().adjoint();
    }
    return k;
}

}  // namespace

NamedValues check_w_preconditions(const MatField& a, const MatField& b, const MatField& r, WCase c) {
    NamedValues out;
    const MatField as = a.adjoint(), bs = b.adjoint(), rs = r.adjoint();
    double a_defect = a.partial_isometry_defect();
    if (a_defect > kPreconditionTolerance) {
        throw LabError("blend_w: a is not a partial isometry (defect " + std::to_string(a_defect) + ")");
    }
    out.emplace_back("bb*b-b", op_norm(b.last() * b.last().adjoint() * b.last() - b.last()));
    out.emplace_back("a*b", (as * b).j_residual());
    if (c == WCase::i) {
        out.emplace_back("a*a-b*b", (as * a - bs * b).j_residual());
    } else {
        out.emplace_back("ab*", (a * bs).j_residual());
        out.emplace_back("r*r-a*a", (rs * r - as * a).j_residual());
        out.emplace_back("rr*-b*b", (r * rs - bs * b).j_residual());
    }
    for (const auto& [name, v] : out) {
        if (v > kPreconditionTolerance) {
            throw LabError("blend_w: " + name + " is not in J (residual " + std::to_string(v) + ")");
        }
    }
    return out;
}

WResult blend_w_with_h(const MatField& a, const MatField& b, const MatField& r_in, const MatField& h, WCase c) {
    const MatField k = sqrt_complement(h);
    const MatField as = a.adjoint(), bs = b.adjoint();
    const MatField r = c == WCase::i ? as * a : r_in;
    const MatField rs = r.adjoint();

    WResult out;
    if (c == WCase::i) {
        out.w = h * a + k * b;
    } else {
        out.w = h * h * a + k * k * b + h * k * (a * rs + b * r);
    }
    const MatField& w = out.w;
    const MatField ws = w.adjoint();
    const MatField h2 = h * h, k2 = k * k, hk = h * k;

    DefectReport& rep = out.report;
    rep.defects.emplace_back("ww*w-w", (w * ws * w - w).norm());
    if (c == WCase::i) {
        rep.defects.emplace_back("w*w-a*a", (ws * w - as * a).norm());
    } else {
        rep.defects.emplace_back("w*w-rhs", (ws * w - (h2 * as * a + k2 * bs * b + hk * (r + rs))).norm());
    }
    double ww = (w * ws - (h2 * a * as + k2 * b * bs + hk * (b * r * as + a * rs * bs))).norm();
    // In case (i) with r = a*a this deviation is an identity, not a limit.
    (c == WCase::i ? rep.exact_residuals : rep.defects).emplace_back("ww*-rhs", ww);
    rep.j_residuals.emplace_back("ww*w-w", (w * ws * w - w).j_residual());
    return out;
}

WResult blend_w(const MatField& a, const MatField& b, const MatField& r, double t, WCase c) {
    if (!(t >= 0.0 && t < 1.0)) throw LabError("blend_w: t must lie in [0, 1)");
    NamedValues pre = check_w_preconditions(a, b, c == WCase::i ? a.adjoint() * a : r, c);
    WResult out = blend_w_with_h(a, b, r, ramp_h(a.grid_size(), a.fiber_dim(), t), c);
    out.report.t = t;
    out.report.j_residuals.insert(out.report.j_residuals.begin(), pre.begin(), pre.end());
    return out;
}

WScenario canonical_scenario(WCase c) {
    constexpr std::size_t m = 4, grid = 16;
    const std::size_t half = grid / 2;
    WScenario s;
    s.which = c;
    s.a = MatField(grid, m);
    s.b = MatField(grid, m);
    s.r = MatField(grid, m);
    if (c == WCase::i) {
        // a lives off the last fiber; b picks up an a-component where h = t.
        s.name = "case-i";
        for (std::size_t p = 0; p < grid; ++p) {
            s.a[p] = matrix_unit(m, 1, 2);
            s.b[p] = matrix_unit(m, 3, 2);
            if (p <= half) s.b[p] += 0.2 * matrix_unit(m, 1, 2);
        }
    } else {
        s.name = "case-ii";
        for (std::size_t p = 0; p <= grid; ++p) {
            s.a[p] = matrix_unit(m, 1, 2);
            s.b[p] = matrix_unit(m, 3, 4);
            if (p <= half) s.b[p] = 1.2 * matrix_unit(m, 3, 4) + 0.1 * matrix_unit(m, 1, 2);
            s.r[p] = matrix_unit(m, 4, 2);
        }
    }
    return s;
}

}  // namespace gkt
