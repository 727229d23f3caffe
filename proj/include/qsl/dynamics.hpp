#pragma once

#include "qsl/linalg.hpp"
#include "qsl/state.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsl {

struct JumpOperator {
    Matrix op;
    double rate = 0.0;  // inverse time
};

// Closed-form handles for catalog models, all measured from the catalog's
// initial state.
struct AnalyticOracles {
    std::function<DensityMatrix(double)> state;
    std::function<double(double)> speed;
    std::function<double(double)> path_length;
    std::function<double(double)> bures_from_start;
};

struct StationaryInfo {
    DensityMatrix state;
    bool reached_only_asymptotically = true;
};

// GKSL generator: H (hbar = 1) plus weighted jump operators.
class LindbladModel {
public:
    LindbladModel(std::string name, HermitianMatrix hamiltonian, std::vector<JumpOperator> jumps);

    const std::string& name() const noexcept { return name_; }
    int dim() const noexcept { return hamiltonian_.dim(); }
    const HermitianMatrix& hamiltonian() const noexcept { return hamiltonian_; }
    const std::vector<JumpOperator>& jumps() const noexcept { return jumps_; }
    double max_rate() const;
    bool has_dissipation() const { return max_rate() > 0.0; }

    // Rough bound on the generator's norm; sets safe step sizes.
    double generator_scale() const;

    // d rho / dt for an arbitrary (possibly mid-stage) matrix.
    Matrix apply(const Matrix& rho) const;

    std::optional<StationaryInfo> analytic_stationary;
    std::optional<DensityMatrix> default_initial;
    std::optional<AnalyticOracles> oracles;

private:
    std::string name_;
    HermitianMatrix hamiltonian_;
    std::vector<JumpOperator> jumps_;
    std::vector<Matrix> decay_terms_;  // rate * L^dag L / 2
};

HermitianMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho);

// Uniform grid t_i = i * horizon / steps, i = 0..steps.
struct Trajectory {
    LindbladModel model;
    double horizon = 0.0;
    std::size_t steps = 0;
    std::vector<DensityMatrix> states;
    std::vector<HermitianMatrix> derivatives;
    // Largest |Tr rho - 1| removed by renormalization after any step.
    double max_trace_correction = 0.0;

    double step() const { return horizon / static_cast<double>(steps); }
    double time(std::size_t i) const { return static_cast<double>(i) * step(); }
    std::size_t size() const { return states.size(); }
};

inline constexpr std::size_t kMinSteps = 16;

// Fixed-step classical RK4. Each stored state is re-symmetrized and trace
// renormalized; derivatives come from the generator.
Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0, double horizon, std::size_t steps);

struct StationaryResult {
    DensityMatrix state;
    bool reached_only_asymptotically = true;
};

StationaryResult stationary_state(const LindbladModel& model);

}  // namespace qsl
