#pragma once

// Test-only reference computations. Nothing here calls into the library's
// quadrature, integrator or bound code.

#include <array>
#include <cmath>
#include <functional>

namespace oracle {

// Composite 5-point Gauss-Legendre over [a, b]; never samples the endpoints.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels) {
    static constexpr std::array<double, 5> x{0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                             0.9061798459386640};
    static constexpr std::array<double, 5> w{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                             0.2369268850561891, 0.2369268850561891};
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t k = 0; k < x.size(); ++k) sum += w[k] * f(mid + 0.5 * h * x[k]);
    }
    return 0.5 * h * sum;
}

// int_0^T f(t) dt for f with an integrable t^{-1/2} divergence at 0, via
// t = u^2. `points` counts integrand evaluations.
inline double singular_integral(const std::function<double(double)>& f, double horizon, int points = 1'000'000) {
    auto g = [&](double u) { return 2.0 * u * f(u * u); };
    return gauss_legendre(g, 0.0, std::sqrt(horizon), points / 5);
}

// Bures speed of the spiral from its Bloch closed form:
// zeta = r^2 (4 g^2 + w^2) + 4 g^2 r^4 / (1 - r^2), r = exp(-2 g t).
inline double spiral_speed(double gamma, double omega, double t) {
    const double r = std::exp(-2.0 * gamma * t);
    const double zeta = r * r * (4.0 * gamma * gamma + omega * omega) +
                        4.0 * gamma * gamma * std::pow(r, 4) / (-std::expm1(-4.0 * gamma * t));
    return 0.5 * std::sqrt(zeta);
}

// Bures angle of the spiral state from |+><+|.
inline double spiral_bures(double gamma, double omega, double t) {
    const double x = std::exp(-2.0 * gamma * t) * std::cos(omega * t);
    return std::acos(std::sqrt(0.5 * (1.0 + x)));
}

inline double amplitude_damping_speed(double gamma, double t) {
    return 0.5 * gamma * std::sqrt(std::exp(-gamma * t) / (1.0 - std::exp(-gamma * t)));
}

// Smallest root of an increasing function on [lo, hi] by plain bisection.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iterations = 200) {
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Least-squares slope of y against x.
template <typename Range>
double ls_slope(const Range& xs, const Range& ys) {
    double mx = 0.0, my = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace oracle
