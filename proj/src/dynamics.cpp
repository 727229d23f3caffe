#include "qsl/dynamics.hpp"

#include "qsl/error.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

namespace qsl {

LindbladModel::LindbladModel(std::string name, HermitianMatrix hamiltonian, std::vector<JumpOperator> jumps)
    : name_(std::move(name)), hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
    const int n = hamiltonian_.dim();
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const JumpOperator& j = jumps_[k];
        if (j.op.rows() != n || j.op.cols() != n) {
            throw DimensionError("jump operator " + std::to_string(k) + " does not match Hamiltonian dimension " +
                                 std::to_string(n));
        }
        if (!(j.rate >= 0.0) || !std::isfinite(j.rate)) {
            throw DomainError("jump operator " + std::to_string(k) + " has invalid rate " + std::to_string(j.rate));
        }
        if (!j.op.allFinite()) throw InvalidMatrixError("jump operator " + std::to_string(k) + " is not finite");
        decay_terms_.push_back(0.5 * j.rate * (j.op.adjoint() * j.op));
    }
}

double LindbladModel::max_rate() const {
    double g = 0.0;
    for (const JumpOperator& j : jumps_) {
        if (j.op.norm() > 0.0) g = std::max(g, j.rate);
    }
    return g;
}

double LindbladModel::generator_scale() const {
    double s = 2.0 * hamiltonian_.matrix().norm();
    for (const JumpOperator& j : jumps_) s += 2.0 * j.rate * j.op.squaredNorm();
    return s;
}

Matrix LindbladModel::apply(const Matrix& rho) const {
    if (rho.rows() != dim() || rho.cols() != dim()) {
        throw DimensionError("state dimension " + std::to_string(rho.rows()) + " does not match model dimension " +
                             std::to_string(dim()));
    }
    const Matrix& h = hamiltonian_.matrix();
    const Complex minus_i(0.0, -1.0);
    Matrix out = minus_i * (h * rho - rho * h);
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const JumpOperator& j = jumps_[k];
        if (j.rate == 0.0) continue;
        out += j.rate * (j.op * rho * j.op.adjoint());
        out -= decay_terms_[k] * rho + rho * decay_terms_[k];
    }
    return out;
}

HermitianMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho) {
    return HermitianMatrix::symmetrize(model.apply(rho.matrix()));
}

Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0, double horizon, std::size_t steps) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("evolve: horizon must be positive, got " + std::to_string(horizon));
    }
    if (steps < kMinSteps) {
        throw DomainError("evolve: steps must be >= " + std::to_string(kMinSteps) + ", got " + std::to_string(steps));
    }
    if (rho0.dim() != model.dim()) throw DimensionError("evolve: initial state dimension does not match model");

    Trajectory traj{model, horizon, steps, {}, {}, 0.0};
    traj.states.reserve(steps + 1);
    traj.derivatives.reserve(steps + 1);
    traj.states.push_back(rho0);
    traj.derivatives.push_back(lindblad_rhs(model, rho0));

    const double h = traj.step();
    const DensityTolerances stored_tol{1e-8, 1e-8};
    bool warned = false;
    Matrix rho = rho0.matrix();
    for (std::size_t i = 1; i <= steps; ++i) {
        const Matrix k1 = model.apply(rho);
        const Matrix k2 = model.apply(rho + 0.5 * h * k1);
        const Matrix k3 = model.apply(rho + 0.5 * h * k2);
        const Matrix k4 = model.apply(rho + h * k3);
        Matrix next = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!next.allFinite()) throw IntegrationError(i, "non-finite state");

        next = 0.5 * (next + next.adjoint());
        const double tr = next.trace().real();
        const double correction = std::abs(tr - 1.0);
        traj.max_trace_correction = std::max(traj.max_trace_correction, correction);
        if (correction > 1e-6 && !warned) {
            std::clog << "qsl: evolve renormalized trace by factor " << 1.0 / tr << " at step " << i << '\n';
            warned = true;
        }
        next /= tr;

        try {
            DensityMatrix state(HermitianMatrix::symmetrize(next), stored_tol);
            traj.derivatives.push_back(lindblad_rhs(model, state));
            rho = state.matrix();
            traj.states.push_back(std::move(state));
        } catch (const IntegrationError&) {
            throw;
        } catch (const Error& e) {
            throw IntegrationError(i, e.what());
        }
    }
    return traj;
}

StationaryResult stationary_state(const LindbladModel& model) {
    if (model.analytic_stationary) {
        return {model.analytic_stationary->state, model.analytic_stationary->reached_only_asymptotically};
    }
    const double gamma_max = model.max_rate();
    if (gamma_max <= 0.0) {
        throw NoStationaryStateError("model '" + model.name() +
                                     "' has no dissipation; unitary dynamics has no unique stationary state");
    }
    constexpr int kMaxCheckpoints = 10000;
    constexpr double kConvergence = 1e-12;
    const double spacing = 1.0 / gamma_max;
    const auto substeps = static_cast<std::size_t>(
        std::max<double>(static_cast<double>(kMinSteps), std::ceil(spacing * model.generator_scale() / 0.05)));

    DensityMatrix current = DensityMatrix::maximally_mixed(model.dim());
    for (int k = 0; k < kMaxCheckpoints; ++k) {
        Trajectory leg = evolve(model, current, spacing, substeps);
        DensityMatrix next = leg.states.back();
        const double d = trace_distance(current, next);
        current = std::move(next);
        if (d < kConvergence) return {current, true};
    }
    throw NoStationaryStateError("model '" + model.name() + "': no stationary state found within " +
                                 std::to_string(kMaxCheckpoints) + " checkpoints");
}

}  // namespace qsl
