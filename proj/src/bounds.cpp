#include "qsl/bounds.hpp"

#include "qsl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qsl {

namespace {

void check_consistency(double bures, double length, double tol) {
    if (bures > length + tol) {
        throw InconsistencyError("Bures angle " + std::to_string(bures) + " exceeds path length " +
                                 std::to_string(length) + " by more than " + std::to_string(tol));
    }
}

}  // namespace

TauMin tau_min(const PathLength& pl, double bures, double consistency_tol) {
    if (pl.size() < 2) throw DomainError("tau_min: path-length table too short");
    if (bures < 0.0) throw DomainError("tau_min: negative Bures angle");
    const double total = pl.total();
    check_consistency(bures, total, consistency_tol);
    const double h = pl.times[1] - pl.times[0];
    if (bures <= 0.0) return {0.0, 0.0};
    if (bures >= total) return {pl.horizon(), h};

    // First index with l(t_i) >= B.
    const auto it = std::lower_bound(pl.length.begin(), pl.length.end(), bures);
    const auto i = static_cast<std::size_t>(it - pl.length.begin());
    const double l0 = pl.length[i - 1];
    const double l1 = pl.length[i];
    const double frac = l1 > l0 ? (bures - l0) / (l1 - l0) : 1.0;
    return {pl.times[i - 1] + frac * (pl.times[i] - pl.times[i - 1]), h};
}

double tau_av(const PathLength& pl, double bures, double tau, double consistency_tol) {
    if (!(tau > 0.0)) throw DomainError("tau_av: tau must be positive");
    const double length = pl.length[pl.index_of(tau)];
    check_consistency(bures, length, consistency_tol);
    if (length == 0.0) return 0.0;
    return std::min(bures, length) / average_speed(pl, tau);
}

double deffner_lutz(const PathLength& pl, double bures, double tau, NormKind which, const DensityMatrix& rho0) {
    const double purity = rho0.purity();
    if (purity <= 1.0 - 1e-8) {
        throw DomainError("Deffner-Lutz bound requires a pure initial state, purity is " + std::to_string(purity));
    }
    if (!(tau > 0.0)) throw DomainError("deffner_lutz: tau must be positive");
    const double lambda = pl.norm_integral(which)[pl.index_of(tau)] / tau;
    if (!(lambda > 0.0)) throw DomainError("Deffner-Lutz bound undefined for frozen dynamics (Lambda = 0)");
    const double s = std::sin(bures);
    return s * s / lambda;
}

double custom_speed_bound(const Trajectory& traj, double numerator, const SpeedFunctional& speed) {
    if (!speed) throw DomainError("custom_speed_bound: no speed functional supplied");
    const double h = traj.step();
    double integral = 0.0;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        integral += 0.5 * h *
                    (speed(traj.states[i - 1], traj.derivatives[i - 1]) + speed(traj.states[i], traj.derivatives[i]));
    }
    const double average = integral / traj.horizon;
    if (!(average > 0.0)) throw DomainError("custom_speed_bound: average speed is zero");
    return numerator / average;
}

std::string_view to_string(Attainability kind) {
    return kind == Attainability::Attainable ? "Attainable" : "Unattainable";
}

AttainabilityVerdict classify_attainability(double bures, double length, double tol) {
    AttainabilityVerdict v;
    v.gap = std::max(length - bures, 0.0);
    v.tolerance = tol;
    v.kind = v.gap <= tol ? Attainability::Attainable : Attainability::Unattainable;
    return v;
}

BoundReport bound_report(const Trajectory& traj, const PathLength& pl, const ReportOptions& opts) {
    BoundReport r;
    r.tau = traj.horizon;
    r.steps = traj.steps;
    r.bures = bures_angle(traj.states.front(), traj.states.back());
    r.length = pl.total();
    r.ratio = r.length > 0.0 ? std::min(r.bures / r.length, 1.0) : 1.0;
    r.tau_min = tau_min(pl, r.bures, opts.consistency_tol);
    r.tau_av = tau_av(pl, r.bures, r.tau, opts.consistency_tol);

    const DensityMatrix& rho0 = traj.states.front();
    const bool pure = rho0.purity() > 1.0 - 1e-8;
    if (pure && pl.op.back() > 0.0) {
        r.tau_op = deffner_lutz(pl, r.bures, r.tau, NormKind::op, rho0);
        r.tau_hs = deffner_lutz(pl, r.bures, r.tau, NormKind::hs, rho0);
        r.tau_tr = deffner_lutz(pl, r.bures, r.tau, NormKind::tr, rho0);
    }
    r.verdict = classify_attainability(r.bures, r.length, opts.attainability_tol);
    return r;
}

BoundReport bound_report(const Trajectory& traj, const ReportOptions& opts) {
    return bound_report(traj, path_length(speed_profile(traj)), opts);
}

double resolution_floor(const std::vector<double>& distances) {
    const double machine_floor = 4.0 * std::numeric_limits<double>::epsilon();
    const std::size_t n = distances.size();
    if (n < 3) return machine_floor;
    const std::size_t tail = std::max<std::size_t>(2, n / 10);
    std::vector<double> diffs;
    diffs.reserve(tail);
    for (std::size_t i = n - tail; i < n; ++i) diffs.push_back(std::abs(distances[i] - distances[i - 1]));
    const auto mid = diffs.begin() + static_cast<std::ptrdiff_t>(diffs.size() / 2);
    std::nth_element(diffs.begin(), mid, diffs.end());
    return std::max(machine_floor, *mid);
}

StoppingTimeCurve stopping_time_curve(const Trajectory& traj, const DensityMatrix& rho_f,
                                      const std::vector<double>& epsilons) {
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        if (!(epsilons[k] > 0.0)) throw DomainError("epsilon values must be positive");
        if (k > 0 && !(epsilons[k] < epsilons[k - 1])) throw DomainError("epsilon values must be strictly descending");
    }
    std::vector<double> distances(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) distances[i] = trace_distance(traj.states[i], rho_f);

    auto first_crossing = [&](double eps) -> std::optional<double> {
        for (std::size_t i = 0; i < distances.size(); ++i)
            if (distances[i] < eps) return traj.time(i);
        return std::nullopt;
    };

    StoppingTimeCurve curve;
    curve.floor_epsilon = resolution_floor(distances);
    curve.floor_time = first_crossing(curve.floor_epsilon);
    for (double eps : epsilons) {
        StoppingTimeEntry e;
        e.epsilon = eps;
        e.saturated = eps < curve.floor_epsilon;
        e.time = e.saturated ? curve.floor_time : first_crossing(eps);
        curve.entries.push_back(e);
    }
    return curve;
}

std::vector<BoundReport> divergence_scan(const LindbladModel& model, const DensityMatrix& rho0,
                                         const std::vector<double>& taus, double steps_per_unit,
                                         const ReportOptions& opts) {
    if (!(steps_per_unit > 0.0)) throw DomainError("divergence_scan: steps_per_unit must be positive");
    for (std::size_t k = 1; k < taus.size(); ++k) {
        if (!(taus[k] > taus[k - 1])) throw DomainError("divergence_scan: tau list must be ascending");
    }
    std::vector<BoundReport> reports;
    reports.reserve(taus.size());
    for (double tau : taus) {
        const auto steps = static_cast<std::size_t>(
            std::max(static_cast<double>(kMinSteps), std::ceil(tau * steps_per_unit - 1e-9)));
        reports.push_back(bound_report(evolve(model, rho0, tau, steps), opts));
    }
    return reports;
}

}  // namespace qsl
