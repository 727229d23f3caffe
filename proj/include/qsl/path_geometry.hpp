#pragma once

#include "qsl/dynamics.hpp"
#include "qsl/linalg.hpp"
#include "qsl/state.hpp"

#include <cstddef>
#include <vector>

namespace qsl {

// Eigenvalue pairs with p_j + p_k <= this are outside the support and skipped.
inline constexpr double kQfiSupportCut = 1e-12;

// zeta_Q = 2 sum_{j,k} |<j|rho_dot|k>|^2 / (p_j + p_k) over the support of rho.
double qfi_rate(const DensityMatrix& rho, const HermitianMatrix& rho_dot);

// Qubit closed form: |r_dot|^2 + (r . r_dot)^2 / (1 - |r|^2).
double qfi_rate_bloch(const BlochVector& r, const BlochVector& r_dot);

// Bures speed sqrt(zeta_Q) / 2 and Schatten norms of rho_dot on the grid.
struct SpeedProfile {
    std::vector<double> times;
    std::vector<double> qfi;
    std::vector<double> speed;
    std::vector<SchattenNorms> norm_speeds;
    // c in speed(t) ~ c / sqrt(t) as t -> 0; nonzero when the initial state is
    // rank deficient and the generator populates its kernel.
    double endpoint_singularity = 0.0;

    std::size_t size() const { return times.size(); }
};

SpeedProfile speed_profile(const Trajectory& traj);

// Coefficient c of the t^{-1/2} divergence of the Bures speed at t = 0:
// c = sqrt(Tr(P rho_dot P)) / 2 with P the projector on ker(rho_0).
double endpoint_singularity(const DensityMatrix& rho0, const HermitianMatrix& rho_dot0);

struct PathLength {
    std::vector<double> times;
    std::vector<double> length;  // cumulative Bures length
    std::vector<double> op;      // cumulative integrals of ||rho_dot||_x
    std::vector<double> hs;
    std::vector<double> tr;

    std::size_t size() const { return times.size(); }
    double horizon() const { return times.back(); }
    double total() const { return length.back(); }
    const std::vector<double>& norm_integral(NormKind kind) const;
    // Grid index of t, which must lie on the grid.
    std::size_t index_of(double t) const;
};

// Cumulative trapezoid quadrature. An endpoint singularity c / sqrt(t) is
// integrated analytically and only the bounded remainder is sampled.
PathLength path_length(const SpeedProfile& profile);

// l(tau) / tau for tau on the grid.
double average_speed(const PathLength& pl, double tau);

}  // namespace qsl
