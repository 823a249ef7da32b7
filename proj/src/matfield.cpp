#include "gkt/matfield.hpp"

#include <algorithm>
#include <cmath>

namespace gkt {

double op_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

MatField::MatField(std::size_t grid_size, std::size_t fiber_dim)
    : dim_(fiber_dim), fibers_(grid_size + 1, Matrix::Zero(fiber_dim, fiber_dim)) {}

MatField MatField::constant(std::size_t grid_size, const Matrix& m) {
    if (m.rows() != m.cols()) throw LabError("MatField: fibers must be square");
    MatField f(grid_size, static_cast<std::size_t>(m.rows()));
    for (auto& x : f.fibers_) x = m;
    return f;
}

MatField MatField::scalar(std::size_t dim, const std::vector<double>& values) {
    if (values.empty()) throw LabError("MatField::scalar: no grid values");
    MatField f(values.size() - 1, dim);
    for (std::size_t s = 0; s < values.size(); ++s) f.fibers_[s] = values[s] * Matrix::Identity(dim, dim);
    return f;
}

MatField MatField::adjoint() const {
    MatField out = *this;
    for (auto& x : out.fibers_) x = x.adjoint().eval();
    return out;
}

double MatField::norm() const {
    double n = 0.0;
    for (const auto& x : fibers_) n = std::max(n, op_norm(x));
    return n;
}

double MatField::partial_isometry_defect() const {
    double n = 0.0;
    for (const auto& x : fibers_) n = std::max(n, op_norm(x * x.adjoint() * x - x));
    return n;
}

namespace {

void require_same_shape(const MatField& a, const MatField& b) {
    if (a.num_points() != b.num_points() || a.fiber_dim() != b.fiber_dim()) {
        throw LabError("MatField: shape mismatch");
    }
}

}  // namespace

MatField& MatField::operator+=(const MatField& o) {
    require_same_shape(*this, o);
    for (std::size_t s = 0; s < fibers_.size(); ++s) fibers_[s] += o.fibers_[s];
    return *this;
}

MatField& MatField::operator-=(const MatField& o) {
    require_same_shape(*this, o);
    for (std::size_t s = 0; s < fibers_.size(); ++s) fibers_[s] -= o.fibers_[s];
    return *this;
}

MatField& MatField::operator*=(Complex s) {
    for (auto& x : fibers_) x *= s;
    return *this;
}

MatField operator+(MatField a, const MatField& b) { return a += b; }
MatField operator-(MatField a, const MatField& b) { return a -= b; }
MatField operator*(Complex s, MatField a) { return a *= s; }

MatField operator*(const MatField& a, const MatField& b) {
    require_same_shape(a, b);
    MatField out = a;
    for (std::size_t s = 0; s < a.num_points(); ++s) out[s] = a[s] * b[s];
    return out;
}

std::vector<double> ramp_profile(std::size_t grid_size) {
    if (grid_size < 2) throw LabError("ramp_profile: grid needs at least 3 points");
    std::vector<double> rho(grid_size + 1);
    const std::size_t half = grid_size / 2;
    for (std::size_t s = 0; s <= grid_size; ++s) {
        rho[s] = s <= half ? 1.0 : static_cast<double>(grid_size - s) / static_cast<double>(grid_size - half);
    }
    return rho;
}

MatField ramp_h(std::size_t grid_size, std::size_t dim, double t) {
    std::vector<double> h = ramp_profile(grid_size);
    for (auto& x : h) x *= t;
    return MatField::scalar(dim, h);
}

MatField ramp_k(std::size_t grid_size, std::size_t dim, double t) {
    std::vector<double> k = ramp_profile(grid_size);
    for (auto& x : k) x = std::sqrt(1.0 - t * t * x * x);
    return MatField::scalar(dim, k);
}

Matrix matrix_unit(std::size_t m, std::size_t i, std::size_t j) {
    Matrix e = Matrix::Zero(m, m);
    e(i - 1, j - 1) = 1.0;
    return e;
}

}  // namespace gkt
