// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "qsl/bounds.hpp"
#include "qsl/catalog.hpp"
#include "qsl/dynamics.hpp"
#include "qsl/path_geometry.hpp"
#include "qsl/sampling.hpp"
#include "qsl/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace qsl;

namespace {

// Pinned tolerances.
constexpr double kInequalitySlack = 1e-4;
constexpr double kLengthTol = 1e-4;
constexpr double kCollapseRelTol = 1e-3;
constexpr double kIdentityRelTol = 1e-12;
constexpr double kDeffnerLutzTol = 1e-3;
constexpr double kGapFactor = 10.0;
constexpr double kConvergedTol = 1e-3;
constexpr double kSlopeRelTol = 0.05;
constexpr double kQfiRelTol = 1e-6;
constexpr double kQfiPrecessionTol = 1e-8;
constexpr double kOrderLo = 3.5, kOrderHi = 4.5;
constexpr double kTraceDriftTol = 1e-8;

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

double bures_end(const Trajectory& t) { return bures_angle(t.states.front(), t.states.back()); }

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

double horizon_for(const LindbladModel& m, double gamma, double omega) {
    return 10.0 / (m.name() == "precession" ? omega : gamma);
}

Outcome inequality() {
    double worst = -1.0;
    std::string where;
    for (double gamma : {0.2, 1.0, 5.0}) {
        for (double omega : {0.2, 1.0, 5.0}) {
            for (const LindbladModel& m : catalog(gamma, omega)) {
                const Trajectory traj = evolve(m, *m.default_initial, horizon_for(m, gamma, omega), 4000);
                const PathLength pl = path_length(speed_profile(traj));
                for (std::size_t i = 0; i < traj.size(); ++i) {
                    const double excess = bures_angle(traj.states.front(), traj.states[i]) - pl.length[i];
                    if (excess > worst) {
                        worst = excess;
                        where = m.name() + " gamma=" + num(gamma) + " omega=" + num(omega) + " t=" + num(traj.time(i));
                    }
                }
            }
        }
    }
    return {worst <= kInequalitySlack, "max B - l = " + num(worst) + " at " + where};
}

Outcome geodesic_collapse() {
    const double tau = std::log(4.0);
    const LindbladModel m = amplitude_damping(1.0);
    const Trajectory traj = evolve(m, *m.default_initial, tau, 4000);
    const BoundReport r = bound_report(traj);
    const double dl = std::abs(r.length - std::numbers::pi / 3);
    const double dmin = std::abs(r.tau_min.value - tau);
    const double dav = std::abs(r.tau_av - tau);
    const bool ok = dl <= kLengthTol && r.verdict.kind == Attainability::Attainable &&
                    dmin <= kCollapseRelTol * tau && dav <= kCollapseRelTol * tau;
    return {ok, "|l - pi/3| = " + num(dl) + ", verdict " + std::string(to_string(r.verdict.kind)) +
                    ", |tau_min - tau| = " + num(dmin) + ", |tau_av - tau| = " + num(dav)};
}

Outcome average_speed_identity() {
    sampling::Rng rng(4242);
    std::uniform_real_distribution<double> horizon(0.2, 6.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 2 + trial % 4;
        const LindbladModel m = sampling::random_model(rng, dim);
        const DensityMatrix rho0 = trial % 3 == 0 ? sampling::random_density(rng, dim) : sampling::random_pure(rng, dim);
        const double tau = horizon(rng);
        const Trajectory traj = evolve(m, rho0, tau, 400);
        const BoundReport r = bound_report(traj);
        const double expected = std::min(r.bures / r.length, 1.0) * tau;
        worst = std::max(worst, std::abs(r.tau_av - expected) / tau);
    }
    return {worst <= kIdentityRelTol, "200 trajectories, max relative deviation " + num(worst)};
}

Outcome deffner_lutz_forms() {
    double worst = 0.0;
    for (double gamma : {0.5, 1.0, 2.0}) {
        const double tau = 2.0 / gamma;
        const LindbladModel m = amplitude_damping(gamma);
        const BoundReport r = bound_report(evolve(m, *m.default_initial, tau, 4000));
        worst = std::max({worst, std::abs(*r.tau_op / tau - 1.0), std::abs(*r.tau_hs / tau - 1.0 / std::sqrt(2.0)),
                          std::abs(*r.tau_tr / tau - 0.5)});
    }
    int runs = 0, violations = 0;
    for (double gamma : {0.2, 1.0, 5.0}) {
        for (double omega : {0.2, 1.0, 5.0}) {
            for (const LindbladModel& m : catalog(gamma, omega)) {
                const double full = horizon_for(m, gamma, omega);
                for (double frac : {0.1, 0.5, 1.0}) {
                    const BoundReport r = bound_report(evolve(m, *m.default_initial, frac * full, 2000));
                    ++runs;
                    if (!r.tau_op) continue;
                    if (!(*r.tau_op >= *r.tau_hs && *r.tau_hs >= *r.tau_tr)) ++violations;
                }
            }
        }
    }
    return {worst <= kDeffnerLutzTol && violations == 0,
            "max ratio deviation " + num(worst) + ", ordering violations " + std::to_string(violations) + "/" +
                std::to_string(runs)};
}

Outcome spiral_divergence() {
    const LindbladModel m = spiral(0.5, 5.0);
    const std::vector<BoundReport> reports = divergence_scan(m, *m.default_initial, {2.0, 4.0, 8.0, 16.0}, 2000.0);
    bool ok = true;
    double min_gap = INFINITY;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const BoundReport& r = reports[k];
        ok = ok && r.verdict.kind == Attainability::Unattainable && r.verdict.gap > kGapFactor * r.verdict.tolerance;
        min_gap = std::min(min_gap, r.verdict.gap);
        if (k > 0) ok = ok && r.tau_op && *r.tau_op > *reports[k - 1].tau_op;
    }
    const double drift = std::abs(reports[3].tau_min.value - reports[2].tau_min.value);
    ok = ok && drift < kConvergedTol;
    return {ok, "min gap " + num(min_gap) + ", tau_op " + num(*reports[0].tau_op) + " -> " +
                    num(*reports[3].tau_op) + ", |tau_min(16) - tau_min(8)| = " + num(drift)};
}

Outcome precision_floor() {
    const double gamma = 1.0;
    const LindbladModel m = pure_dephasing(gamma);
    const Trajectory traj = evolve(m, *m.default_initial, 50.0, 100000);
    std::vector<double> eps;
    for (int k = 2; k <= 10; ++k) eps.push_back(std::pow(10.0, -k));
    for (int k = 18; k <= 24; k += 2) eps.push_back(std::pow(10.0, -k));
    const StoppingTimeCurve c = stopping_time_curve(traj, stationary_state(m).state, eps);
    std::vector<double> x, y;
    bool ok = true;
    for (const StoppingTimeEntry& e : c.entries) {
        if (e.epsilon >= 1e-10) {
            if (!e.time || e.saturated) return {false, "eps " + num(e.epsilon) + " not resolved"};
            x.push_back(std::log(1.0 / e.epsilon));
            y.push_back(*e.time);
        } else if (e.epsilon <= 1e-18) {
            ok = ok && e.saturated;
        }
    }
    const double s = slope(x, y);
    ok = ok && std::abs(s - 1.0 / (2.0 * gamma)) <= kSlopeRelTol / (2.0 * gamma);
    return {ok, "slope " + num(s) + " (expected " + num(1.0 / (2.0 * gamma)) + "), floor " + num(c.floor_epsilon)};
}

Outcome qfi_cross_validation() {
    sampling::Rng rng(777);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const DensityMatrix rho = sampling::random_density_with_floor(rng, 2, 1.001e-3);
        const BlochVector v{normal(rng), normal(rng), normal(rng)};
        const HermitianMatrix rho_dot =
            HermitianMatrix::symmetrize(0.5 * (v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z()));
        const double bloch = qfi_rate_bloch(state_to_bloch(rho), v);
        worst = std::max(worst, std::abs(qfi_rate(rho, rho_dot) - bloch) / bloch);
    }
    const double omega = 1.7;
    const LindbladModel m = precession(omega);
    const DensityMatrix& plus = *m.default_initial;
    const double zeta = qfi_rate(plus, lindblad_rhs(m, plus));
    const double dz = std::abs(zeta - omega * omega);
    return {worst <= kQfiRelTol && dz <= kQfiPrecessionTol,
            "500 qubits, max relative deviation " + num(worst) + "; precession |zeta - omega^2| = " + num(dz)};
}

Outcome integrator() {
    const double gamma = 1.0, tau = 2.0;
    const LindbladModel m = amplitude_damping(gamma);
    const double p = std::exp(-gamma * tau);
    Matrix exact = Matrix::Zero(2, 2);
    exact(0, 0) = 1.0 - p;
    exact(1, 1) = p;
    std::vector<double> logh, logerr;
    for (std::size_t steps : {20, 40, 80, 160}) {
        const Trajectory traj = evolve(m, *m.default_initial, tau, steps);
        const double err = (traj.states.back().matrix() - exact).cwiseAbs().maxCoeff();
        logh.push_back(std::log(tau / static_cast<double>(steps)));
        logerr.push_back(std::log(err));
    }
    const double order = slope(logh, logerr);

    const LindbladModel long_run = spiral(0.5, 5.0);
    const Trajectory traj = evolve(long_run, *long_run.default_initial, 100.0, 100000);
    double drift = traj.max_trace_correction;
    for (const DensityMatrix& rho : traj.states) drift = std::max(drift, std::abs(rho.matrix().trace().real() - 1.0));
    return {order >= kOrderLo && order <= kOrderHi && drift < kTraceDriftTol,
            "observed order " + num(order) + ", trace drift " + num(drift) + " over 1e5 steps"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 B(rho0, rho_t) <= l(t) on the catalog grid", inequality},
        {"AC2 geodesic collapse on amplitude damping", geodesic_collapse},
        {"AC3 tau_av = (B / l) tau on random trajectories", average_speed_identity},
        {"AC4 Deffner-Lutz closed forms and ordering", deffner_lutz_forms},
        {"AC5 spiral unattainability and tau_op divergence", spiral_divergence},
        {"AC6 epsilon-sweep slope and precision floor", precision_floor},
        {"AC7 QFI spectral vs Bloch cross-validation", qfi_cross_validation},
        {"AC8 RK4 order and trace drift", integrator},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.passed) ++failures;
        std::printf("%s %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
