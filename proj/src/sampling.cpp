#include "qsl/sampling.hpp"

#include <string>
#include <vector>

namespace qsl::sampling {

Matrix ginibre(Rng& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = Complex(normal(rng), normal(rng));
    return g;
}

HermitianMatrix random_hermitian(Rng& rng, int dim, double scale) {
    const Matrix g = ginibre(rng, dim);
    return HermitianMatrix::symmetrize(0.5 * scale * (g + g.adjoint()));
}

DensityMatrix random_density(Rng& rng, int dim) {
    const Matrix g = ginibre(rng, dim);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(HermitianMatrix::symmetrize(rho));
}

DensityMatrix random_pure(Rng& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd psi(dim);
    for (int k = 0; k < dim; ++k) psi(k) = Complex(normal(rng), normal(rng));
    return DensityMatrix::pure(psi);
}

DensityMatrix random_density_with_floor(Rng& rng, int dim, double min_eigenvalue) {
    const DensityMatrix base = random_density(rng, dim);
    const double weight = min_eigenvalue * dim;
    const Matrix mixed = (1.0 - weight) * base.matrix() + weight * Matrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(HermitianMatrix::symmetrize(mixed));
}

LindbladModel random_model(Rng& rng, int dim) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_real_distribution<double> rate(0.1, 1.0);
    std::vector<JumpOperator> jumps;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        Matrix l = ginibre(rng, dim);
        l /= l.norm();
        jumps.push_back({l, rate(rng)});
    }
    return LindbladModel("random-d" + std::to_string(dim), random_hermitian(rng, dim, 0.5), std::move(jumps));
}

}  // namespace qsl::sampling
