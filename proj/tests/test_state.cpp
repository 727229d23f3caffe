#include "qsl/error.hpp"
#include "qsl/sampling.hpp"
#include "qsl/state.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qsl;

namespace {

DensityMatrix ket0() { return DensityMatrix::basis_state(2, 0); }
DensityMatrix ket1() { return DensityMatrix::basis_state(2, 1); }
DensityMatrix half_identity() { return DensityMatrix::maximally_mixed(2); }

}  // namespace

TEST_CASE("DensityMatrix invariants") {
    CHECK_NOTHROW(half_identity());
    Matrix bad_trace = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, InvalidMatrixError);
    Matrix negative = Matrix::Zero(2, 2);
    negative(0, 0) = 1.1;
    negative(1, 1) = -0.1;
    CHECK_THROWS_AS(DensityMatrix{negative}, NotPsdError);
    CHECK(half_identity().purity() == doctest::Approx(0.5));
    CHECK(ket0().purity() == doctest::Approx(1.0));
}

TEST_CASE("fidelity examples") {
    const DensityMatrix rho = bloch_to_state({0.3, -0.2, 0.5});
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(ket0(), ket1()) == doctest::Approx(0.0));
    CHECK(fidelity(ket0(), half_identity()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("bures angle examples") {
    const DensityMatrix rho = bloch_to_state({0.3, -0.2, 0.5});
    // arccos loses half the digits next to F = 1.
    CHECK(bures_angle(rho, rho) < 1e-7);
    CHECK(bures_angle(ket0(), ket1()) == doctest::Approx(std::numbers::pi / 2));
    CHECK(bures_angle(ket0(), half_identity()) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));
}

TEST_CASE("trace distance examples") {
    const DensityMatrix rho = bloch_to_state({0.3, -0.2, 0.5});
    CHECK(trace_distance(rho, rho) == 0.0);
    CHECK(trace_distance(ket0(), ket1()) == doctest::Approx(1.0));
    CHECK(trace_distance(ket0(), half_identity()) == doctest::Approx(0.5));
    CHECK_THROWS_AS(trace_distance(ket0(), DensityMatrix::maximally_mixed(3)), DimensionError);
}

TEST_CASE("Bloch conversion") {
    CHECK((bloch_to_state({0, 0, 0}).matrix() - half_identity().matrix()).norm() < 1e-15);
    CHECK((bloch_to_state({0, 0, 1}).matrix() - ket0().matrix()).norm() < 1e-15);
    const Spectrum s = eigh(bloch_to_state({0.6, 0, 0}).hermitian());
    CHECK(s.eigenvalues(0) == doctest::Approx(0.2));
    CHECK(s.eigenvalues(1) == doctest::Approx(0.8));
    CHECK_THROWS_AS(bloch_to_state({1.0, 0.5, 0.0}), DomainError);
    CHECK_THROWS_AS(state_to_bloch(DensityMatrix::maximally_mixed(3)), DimensionError);

    sampling::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = sampling::random_density(rng, 2);
        const BlochVector v = state_to_bloch(rho);
        CHECK(v.norm() <= 1.0 + 1e-10);
        CHECK((bloch_to_state(v).matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("fidelity symmetry and pure-state reduction on random states, dims 2-4") {
    sampling::Rng rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int dim = 2 + trial % 3;
        const DensityMatrix rho = sampling::random_density(rng, dim);
        const DensityMatrix sigma = sampling::random_density(rng, dim);
        CHECK(std::abs(fidelity(rho, sigma) - fidelity(sigma, rho)) < 1e-10);
        CHECK(std::abs(trace_distance(rho, sigma) - trace_distance(sigma, rho)) < 1e-12);

        const DensityMatrix psi = sampling::random_pure(rng, dim);
        const Eigen::VectorXcd vec = eigh(psi.hermitian()).eigenvectors.col(dim - 1);
        const double expected = std::sqrt((vec.adjoint() * sigma.matrix() * vec)(0, 0).real());
        CHECK(std::abs(fidelity(psi, sigma) - expected) < 1e-9);
    }
}

TEST_CASE("Fuchs-van de Graaf sandwich 1 - F <= D <= sqrt(1 - F^2)") {
    sampling::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 2 + trial % 3;
        const DensityMatrix rho = trial % 3 == 0 ? sampling::random_pure(rng, dim) : sampling::random_density(rng, dim);
        const DensityMatrix sigma = sampling::random_density(rng, dim);
        const double f = fidelity(rho, sigma);
        const double d = trace_distance(rho, sigma);
        CHECK(1.0 - f <= d + 1e-9);
        CHECK(d <= std::sqrt(1.0 - f * f) + 1e-9);
    }
}
