#pragma once

#include <random>

#include "gkt/matfield.hpp"

namespace gkt {

/// With d = ‖xx*x − x‖, every eigenvalue λ of x*x has λ(1 − λ)² ≤ d², so
/// d < 1/(2√2) keeps 1/2 out of the spectrum.
inline constexpr double kMaxStraightenDefect = 0.35;
inline constexpr double kHermitianTolerance = 1e-12;

double partial_isometry_defect(const Matrix& x);

/// y = x·f(x*x), f(λ) = λ^{-1/2} for λ > 1/2 and 0 otherwise.
Matrix straighten(const Matrix& x, double max_defect = kMaxStraightenDefect);
MatField straighten(const MatField& x, double max_defect = kMaxStraightenDefect);

/// Orthogonal projection onto the span of eigenvectors of a Hermitian h with eigenvalue > 1/2.
Matrix spectral_projection(const Matrix& h);


struct StraightenTrial {
    double injected = 0.0;
    double input_defect = 0.0;
    double residual = 0.0;    // ‖yy*y − y‖
    double distance = 0.0;    // ‖y − x‖
    double property_v = 0.0;  // max(‖py − y‖, ‖yq‖) for px = x, xq = 0
};

/// Random rank-⌊dim/2⌋ partial isometry plus a perturbation of norm `defect`
/// that keeps px = x and xq = 0 for fixed projections p, q.
StraightenTrial straighten_trial(std::mt19937_64& rng, std::size_t dim, double defect);

}  // namespace gkt
