#include "qsl/catalog.hpp"

#include "qsl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qsl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonnegative(double value, const char* what) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be a nonnegative finite number, got " + std::to_string(value));
    }
}

Matrix sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

DensityMatrix plus_state() { return bloch_to_state({1.0, 0.0, 0.0}); }

double bures_from_plus(double x_component) {
    // F(|+><+|, rho) = sqrt(<+|rho|+>) = sqrt((1 + x) / 2).
    const double f = std::sqrt(std::clamp(0.5 * (1.0 + x_component), 0.0, 1.0));
    return std::acos(f);
}

// Closed forms of the spiral; omega = 0 gives pure dephasing, gamma = 0 precession.
struct SpiralForms {
    double gamma;
    double omega;

    double radius(double t) const { return std::exp(-2.0 * gamma * t); }

    BlochVector bloch(double t) const {
        const double r = radius(t);
        return {r * std::cos(omega * t), r * std::sin(omega * t), 0.0};
    }

    double speed(double t) const {
        if (gamma == 0.0) return 0.5 * omega;
        if (t <= 0.0) return kInf;
        const double r = radius(t);
        const double one_minus_r2 = -std::expm1(-4.0 * gamma * t);
        const double zeta = r * r * (4.0 * gamma * gamma + omega * omega) +
                            4.0 * gamma * gamma * r * r * r * r / one_minus_r2;
        return 0.5 * std::sqrt(zeta);
    }

    double path_length(double t) const {
        if (gamma == 0.0) return 0.5 * omega * t;
        // With r = sin(phi): l = sqrt(a)/(4 gamma) * [E(k, pi/2) - E(k, asin r)],
        // a = 4 gamma^2 + omega^2, k = omega / sqrt(a).
        const double a = 4.0 * gamma * gamma + omega * omega;
        const double k = omega / std::sqrt(a);
        const double phi = std::asin(std::min(radius(t), 1.0));
        return std::sqrt(a) / (4.0 * gamma) * (std::comp_ellint_2(k) - std::ellint_2(k, phi));
    }

    double bures_from_start(double t) const { return bures_from_plus(bloch(t).x); }
};

LindbladModel build_spiral_like(std::string name, double gamma, double omega) {
    HermitianMatrix h = HermitianMatrix::symmetrize(0.5 * omega * pauli::z());
    std::vector<JumpOperator> jumps;
    if (gamma > 0.0) jumps.push_back({pauli::z(), gamma});
    LindbladModel model(std::move(name), std::move(h), std::move(jumps));
    model.default_initial = plus_state();
    if (gamma > 0.0) model.analytic_stationary = StationaryInfo{DensityMatrix::maximally_mixed(2), true};

    const SpiralForms forms{gamma, omega};
    model.oracles = AnalyticOracles{
        [forms](double t) { return bloch_to_state(forms.bloch(t)); },
        [forms](double t) { return forms.speed(t); },
        [forms](double t) { return forms.path_length(t); },
        [forms](double t) { return forms.bures_from_start(t); },
    };
    return model;
}

}  // namespace

LindbladModel amplitude_damping(double gamma) {
    require_nonnegative(gamma, "gamma");
    std::vector<JumpOperator> jumps;
    if (gamma > 0.0) jumps.push_back({sigma_minus(), gamma});
    LindbladModel model("amplitude-damping", HermitianMatrix::zero(2), std::move(jumps));
    model.default_initial = DensityMatrix::basis_state(2, 1);
    if (gamma > 0.0) model.analytic_stationary = StationaryInfo{DensityMatrix::basis_state(2, 0), true};

    model.oracles = AnalyticOracles{
        [gamma](double t) {
            const double excited = std::exp(-gamma * t);
            Matrix m = Matrix::Zero(2, 2);
            m(0, 0) = -std::expm1(-gamma * t);
            m(1, 1) = excited;
            return DensityMatrix(std::move(m));
        },
        [gamma](double t) {
            if (gamma == 0.0) return 0.0;
            if (t <= 0.0) return kInf;
            return 0.5 * gamma * std::sqrt(std::exp(-gamma * t) / -std::expm1(-gamma * t));
        },
        [gamma](double t) { return std::acos(std::exp(-0.5 * gamma * t)); },
        [gamma](double t) { return std::acos(std::exp(-0.5 * gamma * t)); },
    };
    return model;
}

LindbladModel pure_dephasing(double gamma) {
    require_nonnegative(gamma, "gamma");
    return build_spiral_like("pure-dephasing", gamma, 0.0);
}

LindbladModel precession(double omega) {
    require_nonnegative(omega, "omega");
    return build_spiral_like("precession", 0.0, omega);
}

LindbladModel spiral(double gamma, double omega) {
    require_nonnegative(gamma, "gamma");
    require_nonnegative(omega, "omega");
    return build_spiral_like("spiral", gamma, omega);
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"amplitude-damping", "gamma",
         "L = sigma_minus at rate gamma, H = 0, start |1><1|. Bures geodesic; asymptote |0><0| at t -> inf."},
        {"pure-dephasing", "gamma",
         "L = sigma_z at rate gamma, H = 0, start |+><+|. Bures geodesic; asymptote I/2 at t -> inf."},
        {"precession", "omega",
         "H = (omega/2) sigma_z, no jumps, start |+><+|. Unitary, constant speed omega/2, no stationary state."},
        {"spiral", "gamma, omega",
         "H = (omega/2) sigma_z plus L = sigma_z at rate gamma, start |+><+|. Non-geodesic for omega > 0; "
         "asymptote I/2 reached only as t -> inf."},
    };
    return entries;
}

bool is_catalog_name(std::string_view name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return true;
    return false;
}

LindbladModel make_catalog_model(std::string_view name, double gamma, double omega) {
    if (name == "amplitude-damping") return amplitude_damping(gamma);
    if (name == "pure-dephasing") return pure_dephasing(gamma);
    if (name == "precession") return precession(omega);
    if (name == "spiral") return spiral(gamma, omega);
    throw DomainError("unknown model '" + std::string(name) + "'");
}

std::vector<LindbladModel> catalog(double gamma, double omega) {
    return {amplitude_damping(gamma), pure_dephasing(gamma), precession(omega), spiral(gamma, omega)};
}

}  // namespace qsl
