#include "qsl/state.hpp"

#include "qsl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qsl {

DensityMatrix::DensityMatrix(HermitianMatrix m, const DensityTolerances& tol) : h_(std::move(m)) {
    const Complex tr = h_.trace();
    if (std::abs(tr.real() - 1.0) > tol.trace || std::abs(tr.imag()) > kTraceImagTol) {
        throw InvalidMatrixError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    min_eigenvalue_ = eigh(h_).eigenvalues(0);
    if (min_eigenvalue_ < -tol.psd) throw NotPsdError(min_eigenvalue_);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(Matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
    if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
    Matrix m = Matrix::Zero(dim, dim);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw InvalidMatrixError("zero state vector");
    const Eigen::VectorXcd u = psi / n;
    return DensityMatrix(HermitianMatrix::symmetrize(u * u.adjoint()));
}

double DensityMatrix::purity() const {
    return (matrix() * matrix()).trace().real();
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionError("fidelity: dimension mismatch");
    const HermitianMatrix sqrt_rho = matrix_sqrt(rho.hermitian());
    const Matrix& s = sqrt_rho.matrix();
    const HermitianMatrix inner = HermitianMatrix::symmetrize(s * sigma.matrix() * s);
    const RealVector lambda = eigh(inner).eigenvalues;
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() * lambda.cwiseAbs().maxCoeff();
    double f = 0.0;
    for (int k = 0; k < lambda.size(); ++k) {
        if (lambda(k) < -kPsdTol) throw NotPsdError(lambda(k));
        if (lambda(k) > noise) f += std::sqrt(lambda(k));
    }
    if (f > 1.0 + 1e-8) throw DomainError("fidelity " + std::to_string(f) + " exceeds 1 beyond rounding");
    return std::clamp(f, 0.0, 1.0);
}

double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double f = fidelity(rho, sigma);
    // acos(1 - 4 ulp) is already 3e-8; treat fidelity at that level as exact.
    if (f >= 1.0 - 4.0 * std::numeric_limits<double>::epsilon()) return 0.0;
    return std::acos(f);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionError("trace_distance: dimension mismatch");
    const HermitianMatrix diff = HermitianMatrix::symmetrize(rho.matrix() - sigma.matrix());
    return std::min(0.5 * schatten_norm(diff, NormKind::tr), 1.0);
}

namespace pauli {
Matrix x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
Matrix y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}
Matrix z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
}  // namespace pauli

DensityMatrix bloch_to_state(const BlochVector& v) {
    if (v.norm() > 1.0 + 1e-10) {
        throw DomainError("Bloch vector length " + std::to_string(v.norm()) + " exceeds 1");
    }
    Matrix m = 0.5 * (Matrix::Identity(2, 2) + v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z());
    return DensityMatrix(HermitianMatrix::symmetrize(m));
}

BlochVector state_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw DimensionError("Bloch representation requires dim = 2, got " + std::to_string(rho.dim()));
    const Matrix& m = rho.matrix();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

BlochVector bloch_velocity(const HermitianMatrix& rho_dot) {
    if (rho_dot.dim() != 2) throw DimensionError("Bloch velocity requires dim = 2");
    const Matrix& m = rho_dot.matrix();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

}  // namespace qsl
