#include "qsl/verify.hpp"

#include "qsl/bounds.hpp"
#include "qsl/catalog.hpp"
#include "qsl/error.hpp"
#include "qsl/path_geometry.hpp"
#include "qsl/sampling.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qsl {

namespace {

// Collects cases for one group, keeping the first failure.
class Group {
public:
    explicit Group(std::string name) { result_.group = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    void fail(const std::string& what) {
        ++result_.cases;
        if (result_.passed) {
            result_.passed = false;
            result_.counterexample = what;
        }
    }

    InvariantResult finish() { return std::move(result_); }

private:
    InvariantResult result_;
};

template <typename Body>
InvariantResult run_group(const std::string& name, Body body) {
    Group g(name);
    try {
        body(g);
    } catch (const std::exception& e) {
        g.fail(std::string("exception: ") + e.what());
    }
    return g.finish();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

double horizon_for(const LindbladModel& m, double gamma, double omega) {
    const double rate = m.name() == "precession" ? omega : gamma;
    return 10.0 / rate;
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite() {
    std::vector<InvariantResult> out;
    sampling::Rng rng(20180417);

    out.push_back(run_group("eigh reconstruction and unitarity", [&](Group& g) {
        for (int trial = 0; trial < 70; ++trial) {
            const int dim = 2 + trial % 7;
            const HermitianMatrix a = sampling::random_hermitian(rng, dim);
            const Spectrum s = eigh(a);
            const Matrix& v = s.eigenvectors;
            const double recon = (v * s.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint() - a.matrix()).cwiseAbs().maxCoeff();
            const double unit = (v.adjoint() * v - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
            g.check(recon < 1e-10 && unit < 1e-10, [&] {
                return "dim=" + std::to_string(dim) + " reconstruction=" + fmt(recon) + " unitarity=" + fmt(unit);
            });
        }
    }));

    out.push_back(run_group("fidelity symmetry and pure-state reduction", [&](Group& g) {
        for (int trial = 0; trial < 60; ++trial) {
            const int dim = 2 + trial % 3;
            const DensityMatrix rho = sampling::random_density(rng, dim);
            const DensityMatrix sigma = sampling::random_density(rng, dim);
            const double asym = std::abs(fidelity(rho, sigma) - fidelity(sigma, rho));
            g.check(asym < 1e-10, [&] { return "dim=" + std::to_string(dim) + " |F(r,s)-F(s,r)|=" + fmt(asym); });

            std::normal_distribution<double> normal;
            Eigen::VectorXcd psi(dim);
            for (int k = 0; k < dim; ++k) psi(k) = Complex(normal(rng), normal(rng));
            psi.normalize();
            const double expected = std::sqrt((psi.adjoint() * sigma.matrix() * psi)(0, 0).real());
            const double diff = std::abs(fidelity(DensityMatrix::pure(psi), sigma) - expected);
            g.check(diff < 1e-9, [&] { return "dim=" + std::to_string(dim) + " pure reduction error=" + fmt(diff); });
        }
    }));

    out.push_back(run_group("Fuchs-van de Graaf sandwich (100 random pairs)", [&](Group& g) {
        for (int trial = 0; trial < 100; ++trial) {
            const int dim = 2 + trial % 3;
            const DensityMatrix rho = trial % 4 == 0 ? sampling::random_pure(rng, dim) : sampling::random_density(rng, dim);
            const DensityMatrix sigma = sampling::random_density(rng, dim);
            const double f = fidelity(rho, sigma);
            const double d = trace_distance(rho, sigma);
            g.check(1.0 - f <= d + 1e-9 && d <= std::sqrt(1.0 - f * f) + 1e-9,
                    [&] { return "dim=" + std::to_string(dim) + " F=" + fmt(f) + " D=" + fmt(d); });
        }
    }));

    out.push_back(run_group("Schatten norm ordering op <= hs <= tr", [&](Group& g) {
        for (int trial = 0; trial < 100; ++trial) {
            const int dim = 2 + trial % 7;
            const SchattenNorms n = schatten_norms(sampling::random_hermitian(rng, dim));
            g.check(n.op <= n.hs && n.hs <= n.tr,
                    [&] { return "op=" + fmt(n.op) + " hs=" + fmt(n.hs) + " tr=" + fmt(n.tr); });
        }
    }));

    out.push_back(run_group("evolve vs analytic oracles (steps=2000)", [&](Group& g) {
        for (double gamma : {0.2, 1.0, 5.0}) {
            for (const LindbladModel& m : catalog(gamma, 2.0)) {
                const double tau = m.name() == "precession" ? 10.0 : 10.0 / gamma;
                const Trajectory traj = evolve(m, *m.default_initial, tau, 2000);
                double worst = 0.0;
                for (std::size_t i = 0; i < traj.size(); ++i)
                    worst = std::max(worst, trace_distance(traj.states[i], m.oracles->state(traj.time(i))));
                g.check(worst < 1e-6, [&] { return m.name() + " gamma=" + fmt(gamma) + " max D error=" + fmt(worst); });
            }
        }
    }));

    out.push_back(run_group("path length >= Bures angle on catalog trajectories", [&](Group& g) {
        for (double gamma : {0.2, 1.0, 5.0}) {
            for (double omega : {0.2, 1.0, 5.0}) {
                for (const LindbladModel& m : catalog(gamma, omega)) {
                    const Trajectory traj = evolve(m, *m.default_initial, horizon_for(m, gamma, omega), 4000);
                    const PathLength pl = path_length(speed_profile(traj));
                    for (std::size_t i = 0; i < traj.size(); ++i) {
                        const double b = bures_angle(traj.states.front(), traj.states[i]);
                        g.check(b <= pl.length[i] + 1e-4, [&] {
                            return m.name() + " gamma=" + fmt(gamma) + " omega=" + fmt(omega) + " t=" +
                                   fmt(traj.time(i)) + " B=" + fmt(b) + " l=" + fmt(pl.length[i]);
                        });
                    }
                }
            }
        }
    }));

    out.push_back(run_group("amplitude-damping path length pi/3 at tau = ln 4", [&](Group& g) {
        const LindbladModel m = amplitude_damping(1.0);
        const PathLength pl = path_length(speed_profile(evolve(m, *m.default_initial, std::log(4.0), 4000)));
        const double err = std::abs(pl.total() - std::numbers::pi / 3.0);
        g.check(err < 1e-4, [&] { return "l=" + fmt(pl.total()) + " error=" + fmt(err); });
    }));

    out.push_back(run_group("tau_av = (B / l) tau identity", [&](Group& g) {
        std::uniform_real_distribution<double> horizon(0.5, 4.0);
        for (int trial = 0; trial < 40; ++trial) {
            const int dim = 2 + trial % 3;
            const LindbladModel m = sampling::random_model(rng, dim);
            const double tau = horizon(rng);
            const BoundReport r = bound_report(evolve(m, sampling::random_density(rng, dim), tau, 400));
            const double expected = r.bures / r.length * r.tau;
            g.check(std::abs(r.tau_av - expected) <= 1e-12 * r.tau,
                    [&] { return m.name() + " tau=" + fmt(tau) + " tau_av=" + fmt(r.tau_av) + " (B/l)tau=" + fmt(expected); });
        }
    }));

    out.push_back(run_group("geodesic collapse tau_av = tau_min = tau", [&](Group& g) {
        for (double gamma : {0.5, 1.0, 2.0}) {
            for (const LindbladModel& m : {amplitude_damping(gamma), pure_dephasing(gamma)}) {
                const double tau = 2.0 / gamma;
                const BoundReport r = bound_report(evolve(m, *m.default_initial, tau, 4000));
                g.check(r.verdict.kind == Attainability::Attainable &&
                            std::abs(r.tau_min.value - tau) <= 1e-3 * tau && std::abs(r.tau_av - tau) <= 1e-3 * tau,
                        [&] {
                            return m.name() + " gamma=" + fmt(gamma) + " tau_min=" + fmt(r.tau_min.value) +
                                   " tau_av=" + fmt(r.tau_av) + " gap=" + fmt(r.verdict.gap);
                        });
            }
        }
    }));

    out.push_back(run_group("spectral QFI vs Bloch closed form", [&](Group& g) {
        std::normal_distribution<double> normal;
        for (int trial = 0; trial < 200; ++trial) {
            const DensityMatrix rho = sampling::random_density_with_floor(rng, 2, 1.5e-3);
            const BlochVector r = state_to_bloch(rho);
            const BlochVector v{normal(rng), normal(rng), normal(rng)};
            const HermitianMatrix rho_dot =
                HermitianMatrix::symmetrize(0.5 * (v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z()));
            const double spectral = qfi_rate(rho, rho_dot);
            const double bloch = qfi_rate_bloch(r, v);
            const double rel = std::abs(spectral - bloch) / std::max(bloch, 1e-300);
            g.check(rel < 1e-6, [&] { return "spectral=" + fmt(spectral) + " bloch=" + fmt(bloch); });
        }
    }));

    return out;
}

bool print_invariant_suite(const std::vector<InvariantResult>& results, std::ostream& out) {
    bool all = true;
    const InvariantResult* first_failure = nullptr;
    for (const InvariantResult& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.group << " (" << r.cases << " cases)\n";
        if (!r.passed && first_failure == nullptr) first_failure = &r;
        all = all && r.passed;
    }
    if (first_failure != nullptr) {
        out << "first counterexample [" << first_failure->group << "]: " << first_failure->counterexample << '\n';
    }
    return all;
}

}  // namespace qsl
