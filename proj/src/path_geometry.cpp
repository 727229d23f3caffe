#include "qsl/path_geometry.hpp"

#include "qsl/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsl {

double qfi_rate(const DensityMatrix& rho, const HermitianMatrix& rho_dot) {
    if (rho.dim() != rho_dot.dim()) throw DimensionError("qfi_rate: dimension mismatch");
    const Spectrum spec = eigh(rho.hermitian());
    const Matrix& v = spec.eigenvectors;
    const Matrix d = v.adjoint() * rho_dot.matrix() * v;
    const int n = rho.dim();
    double zeta = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const double denom = std::max(spec.eigenvalues(j), 0.0) + std::max(spec.eigenvalues(k), 0.0);
            if (denom <= kQfiSupportCut) continue;
            zeta += 2.0 * std::norm(d(j, k)) / denom;
        }
    }
    return zeta;
}

double qfi_rate_bloch(const BlochVector& r, const BlochVector& r_dot) {
    const double len = r.norm();
    if (len > 1.0 + 1e-9) throw DomainError("Bloch vector outside the unit ball");
    const double radial = r.dot(r_dot);
    const double tangential = r_dot.dot(r_dot);
    if (std::abs(1.0 - len) <= 1e-9) {
        if (std::abs(radial) > 1e-9) {
            throw DomainError("QFI is ill-posed for a pure state with radial Bloch velocity");
        }
        return tangential;
    }
    return tangential + radial * radial / (1.0 - len * len);
}

double endpoint_singularity(const DensityMatrix& rho0, const HermitianMatrix& rho_dot0) {
    const Spectrum spec = eigh(rho0.hermitian());
    const Matrix& v = spec.eigenvectors;
    double kernel_rate = 0.0;
    for (int k = 0; k < rho0.dim(); ++k) {
        if (spec.eigenvalues(k) > kQfiSupportCut) continue;
        kernel_rate += (v.col(k).adjoint() * rho_dot0.matrix() * v.col(k))(0, 0).real();
    }
    const double scale = rho_dot0.matrix().norm();
    if (kernel_rate <= 1e-12 * std::max(scale, 1.0)) return 0.0;
    return 0.5 * std::sqrt(kernel_rate);
}

SpeedProfile speed_profile(const Trajectory& traj) {
    const std::size_t n = traj.size();
    SpeedProfile p;
    p.times.resize(n);
    p.qfi.resize(n);
    p.speed.resize(n);
    p.norm_speeds.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            p.times[i] = traj.time(i);
            p.qfi[i] = qfi_rate(traj.states[i], traj.derivatives[i]);
            p.speed[i] = 0.5 * std::sqrt(p.qfi[i]);
            p.norm_speeds[i] = schatten_norms(traj.derivatives[i]);
        } catch (const Error& e) {
            throw GridPointError(i, std::string("speed_profile: ") + e.what());
        }
    }
    if (n > 0) p.endpoint_singularity = endpoint_singularity(traj.states[0], traj.derivatives[0]);
    return p;
}

namespace {

// Cumulative integral of samples f. With a divergence f ~ c / sqrt(t) + d sqrt(t)
// at t = 0, both terms are integrated analytically (d is fitted from the first
// two interior samples) and the trapezoid rule only sees the remainder.
// Cell contributions are clamped at zero since the integrands are nonnegative.
std::vector<double> cumulative(const std::vector<double>& t, const std::vector<double>& f, double c) {
    const std::size_t n = t.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        // The t = 0 sample is unused when the divergence is integrated analytically.
        if (!std::isfinite(f[i]) && !(i == 0 && c != 0.0)) {
            throw GridPointError(i, "path_length: non-finite speed " + std::to_string(f[i]));
        }
    }
    double d = 0.0;
    if (c != 0.0 && n > 2) {
        auto slope = [&](std::size_t i) { return (f[i] - c / std::sqrt(t[i])) / std::sqrt(t[i]); };
        d = (t[2] * slope(1) - t[1] * slope(2)) / (t[2] - t[1]);
    }
    auto remainder = [&](std::size_t i) {
        if (c == 0.0) return f[i];
        if (i == 0) return 0.0;
        const double root = std::sqrt(t[i]);
        return f[i] - c / root - d * root;
    };
    auto singular_part = [&](double time) {
        const double root = std::sqrt(time);
        return 2.0 * c * root + (2.0 / 3.0) * d * time * root;
    };
    for (std::size_t i = 1; i < n; ++i) {
        const double h = t[i] - t[i - 1];
        double cell = 0.5 * h * (remainder(i - 1) + remainder(i));
        if (c != 0.0) cell += singular_part(t[i]) - singular_part(t[i - 1]);
        out[i] = out[i - 1] + std::max(cell, 0.0);
    }
    return out;
}

std::vector<double> column(const std::vector<SchattenNorms>& norms, NormKind kind) {
    std::vector<double> out(norms.size());
    for (std::size_t i = 0; i < norms.size(); ++i) out[i] = norms[i].get(kind);
    return out;
}

}  // namespace

PathLength path_length(const SpeedProfile& profile) {
    if (profile.size() < 2) throw DomainError("path_length: profile needs at least two grid points");
    PathLength pl;
    pl.times = profile.times;
    pl.length = cumulative(profile.times, profile.speed, profile.endpoint_singularity);
    pl.op = cumulative(profile.times, column(profile.norm_speeds, NormKind::op), 0.0);
    pl.hs = cumulative(profile.times, column(profile.norm_speeds, NormKind::hs), 0.0);
    pl.tr = cumulative(profile.times, column(profile.norm_speeds, NormKind::tr), 0.0);
    return pl;
}

const std::vector<double>& PathLength::norm_integral(NormKind kind) const {
    switch (kind) {
        case NormKind::op: return op;
        case NormKind::hs: return hs;
        case NormKind::tr: return tr;
    }
    return op;
}

std::size_t PathLength::index_of(double t) const {
    if (times.empty()) throw DomainError("empty path-length table");
    const double h = times.size() > 1 ? times[1] - times[0] : 1.0;
    const double pos = t / h;
    const auto i = static_cast<std::size_t>(std::llround(std::max(pos, 0.0)));
    if (i >= times.size() || std::abs(times[i] - t) > 1e-9 * std::max(1.0, std::abs(t))) {
        throw DomainError("time " + std::to_string(t) + " is not on the grid");
    }
    return i;
}

double average_speed(const PathLength& pl, double tau) {
    if (!(tau > 0.0)) throw DomainError("average speed is undefined for tau = " + std::to_string(tau));
    return pl.length[pl.index_of(tau)] / tau;
}

}  // namespace qsl
