#pragma once

#include "qsl/dynamics.hpp"
#include "qsl/path_geometry.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace qsl {

inline constexpr double kDefaultAttainabilityTol = 1e-3;
// Slack allowed for B(rho_0, rho_tau) above the quadrature estimate of l(tau).
inline constexpr double kDefaultConsistencyTol = 1e-4;

struct TauMin {
    double value = 0.0;
    double error_bound = 0.0;  // width of the bracketing cell
};

// Smallest t* with l(t*) = B: bisection over the cumulative table, then
// linear interpolation inside the bracketing cell.
TauMin tau_min(const PathLength& pl, double bures, double consistency_tol = kDefaultConsistencyTol);

// B / v_av = (B / l(tau)) tau. B within consistency_tol above l(tau) counts
// as B = l(tau).
double tau_av(const PathLength& pl, double bures, double tau, double consistency_tol = kDefaultConsistencyTol);

// sin^2(B) / Lambda_x with Lambda_x = (1 / tau) int_0^tau ||rho_dot||_x dt.
// Only defined for pure initial states.
double deffner_lutz(const PathLength& pl, double bures, double tau, NormKind which, const DensityMatrix& rho0);

// Extension point for bounds of the form numerator / ((1/tau) int speed dt)
// with a caller-supplied instantaneous speed. No built-in "quant" speed.
using SpeedFunctional = std::function<double(const DensityMatrix&, const HermitianMatrix&)>;
double custom_speed_bound(const Trajectory& traj, double numerator, const SpeedFunctional& speed);

enum class Attainability { Attainable, Unattainable };
std::string_view to_string(Attainability kind);

struct AttainabilityVerdict {
    Attainability kind = Attainability::Attainable;
    double gap = 0.0;  // l - B
    double tolerance = kDefaultAttainabilityTol;
};

AttainabilityVerdict classify_attainability(double bures, double length, double tol = kDefaultAttainabilityTol);

struct BoundReport {
    double tau = 0.0;
    std::size_t steps = 0;
    double bures = 0.0;
    double length = 0.0;
    double ratio = 1.0;  // B / l clamped to (0, 1]; 1 when l = 0
    TauMin tau_min;
    double tau_av = 0.0;
    // Absent for mixed initial states or frozen dynamics.
    std::optional<double> tau_op;
    std::optional<double> tau_hs;
    std::optional<double> tau_tr;
    AttainabilityVerdict verdict;
};

struct ReportOptions {
    double attainability_tol = kDefaultAttainabilityTol;
    double consistency_tol = kDefaultConsistencyTol;
};

BoundReport bound_report(const Trajectory& traj, const PathLength& pl, const ReportOptions& opts = {});
BoundReport bound_report(const Trajectory& traj, const ReportOptions& opts = {});

struct StoppingTimeEntry {
    double epsilon = 0.0;
    std::optional<double> time;  // empty: not reached within the horizon
    bool saturated = false;
};

struct StoppingTimeCurve {
    std::vector<StoppingTimeEntry> entries;
    double floor_epsilon = 0.0;
    std::optional<double> floor_time;
};

// First grid time with D(rho_t, rho_f) < epsilon. Thresholds below the
// measured resolution floor are flagged saturated and pinned to the floor's
// crossing time.
StoppingTimeCurve stopping_time_curve(const Trajectory& traj, const DensityMatrix& rho_f,
                                      const std::vector<double>& epsilons);

// Noise level of D over the final 10% of the grid, at least 4 machine epsilon.
double resolution_floor(const std::vector<double>& distances);

// One report per horizon; each horizon is integrated with
// max(16, ceil(tau * steps_per_unit)) steps.
std::vector<BoundReport> divergence_scan(const LindbladModel& model, const DensityMatrix& rho0,
                                         const std::vector<double>& taus, double steps_per_unit,
                                         const ReportOptions& opts = {});

}  // namespace qsl
