#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace gkt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

struct LabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spectral norm.
double op_norm(const Matrix& m);

/// Matrix-valued function on the grid {0, ..., G}. The distinguished ideal J
/// consists of the fields vanishing at the last grid point.
class MatField {
public:
    MatField() = default;
    MatField(std::size_t grid_size, std::size_t fiber_dim);

    static MatField constant(std::size_t grid_size, const Matrix& m);
    /// values[s]·I at each grid point.
    static MatField scalar(std::size_t dim, const std::vector<double>& values);

    std::size_t grid_size() const { return fibers_.empty() ? 0 : fibers_.size() - 1; }
    std::size_t fiber_dim() const { return dim_; }
    std::size_t num_points() const { return fibers_.size(); }

    Matrix& operator[](std::size_t s) { return fibers_.at(s); }
    const Matrix& operator[](std::size_t s) const { return fibers_.at(s); }
    const Matrix& last() const { return fibers_.back(); }

    MatField adjoint() const;
    /// Max spectral norm over the grid.
    double norm() const;
    /// Distance to J: the norm of the last fiber.
    double j_residual() const { return op_norm(last()); }
    /// ‖xx*x − x‖.
    double partial_isometry_defect() const;

    MatField& operator+=(const MatField& o);
    MatField& operator-=(const MatField& o);
    MatField& operator*=(Complex s);

private:
    std::size_t dim_ = 0;
    std::vector<Matrix> fibers_;
};

MatField operator+(MatField a, const MatField& b);
MatField operator-(MatField a, const MatField& b);
MatField operator*(const MatField& a, const MatField& b);
MatField operator*(Complex s, MatField a);

/// ρ(s): 1 on the first half of the grid, then linear down to ρ(G) = 0.
std::vector<double> ramp_profile(std::size_t grid_size);
/// h_t = t·ρ and k_t = (1 − h_t²)^{1/2} as scalar fields.
MatField ramp_h(std::size_t grid_size, std::size_t dim, double t);
MatField ramp_k(std::size_t grid_size, std::size_t dim, double t);

/// E_ij (1-based) in dimension m.
Matrix matrix_unit(std::size_t m, std::size_t i, std::size_t j);

}  // namespace gkt
