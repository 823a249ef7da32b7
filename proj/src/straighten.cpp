#include "gkt/straighten.hpp"

#include <cmath>
#include <string>

namespace gkt {

double partial_isometry_defect(const Matrix& x) { return op_norm(x * x.adjoint() * x - x); }

namespace {

Matrix hermitian_part(const Matrix& h) {
    const double scale = std::max(1.0, op_norm(h));
    if (op_norm(h - h.adjoint()) > kHermitianTolerance * scale) {
        throw LabError("straighten: Gram matrix is not Hermitian to working precision");
    }
    return (h + h.adjoint()) / 2.0;
}

}  // namespace

Matrix straighten(const Matrix& x, double max_defect) {
    if (max_defect > kMaxStraightenDefect) {
        throw LabError("straighten: threshold " + std::to_string(max_defect) + " exceeds " +
                       std::to_string(kMaxStraightenDefect));
    }
    const double d = partial_isometry_defect(x);
    if (d > max_defect) {
        throw LabError("straighten: defect " + std::to_string(d) + " exceeds " + std::to_string(max_defect));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(x.adjoint() * x));
    Eigen::VectorXd lambda = eig.eigenvalues();
    Eigen::VectorXcd f(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) f(i) = lambda(i) > 0.5 ? 1.0 / std::sqrt(lambda(i)) : 0.0;
    const Matrix& v = eig.eigenvectors();
    return x * (v * f.asDiagonal() * v.adjoint());
}

MatField straighten(const MatField& x, double max_defect) {
    MatField y = x;
    for (std::size_t s = 0; s < x.num_points(); ++s) y[s] = straighten(x[s], max_defect);
    return y;
}

Matrix spectral_projection(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(h));
    const Matrix& v = eig.eigenvectors();
    Eigen::VectorXcd f(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = eig.eigenvalues()(i) > 0.5 ? 1.0 : 0.0;
    return v * f.asDiagonal() * v.adjoint();
}

namespace {

Matrix random_gaussian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

Matrix random_unitary(std::mt19937_64& rng, std::size_t n) {
    Eigen::HouseholderQR<Matrix> qr(random_gaussian(rng, n));
    return qr.householderQ() * Matrix::Identity(n, n);
}

}  // namespace

StraightenTrial straighten_trial(std::mt19937_64& rng, std::size_t dim, double defect) {
    if (dim < 3) throw LabError("straighten_trial: dimension must be at least 3");
    const auto n = static_cast<Eigen::Index>(dim);
    const Eigen::Index r = n / 2;
    Matrix u = random_unitary(rng, dim), w = random_unitary(rng, dim);
    Matrix v = u.leftCols(r) * w.leftCols(r).adjoint();
    Matrix p = u.leftCols(r + 1) * u.leftCols(r + 1).adjoint();
    Matrix q = w.rightCols(n - r - 1) * w.rightCols(n - r - 1).adjoint();
    Matrix one = Matrix::Identity(n, n);
    Matrix noise = p * random_gaussian(rng, dim) * (one - q);
    noise /= op_norm(noise);

    StraightenTrial t;
    t.injected = defect;
    Matrix x = v + defect * noise;
    t.input_defect = partial_isometry_defect(x);
    Matrix y = straighten(x);
    t.residual = partial_isometry_defect(y);
    t.distance = op_norm(y - x);
    t.property_v = std::max(op_norm(p * y - y), op_norm(y * q));
    return t;
}

}  // namespace gkt
