#pragma once

#include "qsl/linalg.hpp"

namespace qsl {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kTraceImagTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

struct DensityTolerances {
    double trace = kTraceTol;
    double psd = kPsdTol;
};

// Hermitian, unit-trace, positive semidefinite.
class DensityMatrix {
public:
    explicit DensityMatrix(HermitianMatrix m, const DensityTolerances& tol = {});
    explicit DensityMatrix(Matrix m, const DensityTolerances& tol = {})
        : DensityMatrix(HermitianMatrix(std::move(m)), tol) {}

    static DensityMatrix maximally_mixed(int dim);
    static DensityMatrix basis_state(int dim, int index);
    // |psi><psi| for a (not necessarily normalized) vector.
    static DensityMatrix pure(const Eigen::VectorXcd& psi);

    int dim() const noexcept { return h_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return h_; }
    const Matrix& matrix() const noexcept { return h_.matrix(); }
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }
    double purity() const;

private:
    HermitianMatrix h_;
    double min_eigenvalue_ = 0.0;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

DensityMatrix bloch_to_state(const BlochVector& v);
BlochVector state_to_bloch(const DensityMatrix& rho);

// Velocity (r_dot) of the Bloch vector for a traceless Hermitian qubit
// derivative: components are Tr(rho_dot sigma_i).
BlochVector bloch_velocity(const HermitianMatrix& rho_dot);

namespace pauli {
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

}  // namespace qsl
