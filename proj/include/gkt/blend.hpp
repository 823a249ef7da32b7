#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gkt/matfield.hpp"

namespace gkt {

enum class WCase { i, ii };

using NamedValues = std::vector<std::pair<std::string, double>>;

struct DefectReport {
    double t = 0.0;
    /// Norms that only vanish in the limit.
    NamedValues defects;
    /// Deviations that vanish identically in the model (scalar h is central).
    NamedValues exact_residuals;
    /// Norms at the last grid point of the quantities required to lie in J.
    NamedValues j_residuals;

    double defect(const std::string& name) const;
};

struct WResult {
    MatField w;
    DefectReport report;
};

inline constexpr double kPreconditionTolerance = 1e-10;

/// Checks the hypotheses for the given case; throws LabError on failure.
NamedValues check_w_preconditions(const MatField& a, const MatField& b, const MatField& r, WCase c);

/// w = ha + kb (case i, r := a*a) or h²a + k²b + hk(ar* + br) (case ii),
/// with h = t·ρ on the grid.
WResult blend_w(const MatField& a, const MatField& b, const MatField& r, double t, WCase c);

/// Same construction with caller-supplied h; the hypotheses are not checked.
WResult blend_w_with_h(const MatField& a, const MatField& b, const MatField& r, const MatField& h, WCase c);

struct WScenario {
    std::string name;
    WCase which;
    MatField a;
    MatField b;
    MatField r;
};

/// Fiber dimension 4, grid 16.
WScenario canonical_scenario(WCase c);

}  // namespace gkt
