#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsl {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Jacobi sweeps exhausted without reaching the off-diagonal threshold.
class EigenConvergenceError : public Error {
public:
    EigenConvergenceError(double residual, int sweeps)
        : Error("eigh: no convergence after " + std::to_string(sweeps) +
                " sweeps, off-diagonal residual " + std::to_string(residual)),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class NotPsdError : public Error {
public:
    explicit NotPsdError(double min_eigenvalue)
        : Error("matrix is not positive semidefinite: eigenvalue " +
                std::to_string(min_eigenvalue)),
          min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class InvalidMatrixError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class IntegrationError : public Error {
public:
    IntegrationError(std::size_t step, const std::string& what)
        : Error("integration failed at step " + std::to_string(step) + ": " + what),
          step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class NoStationaryStateError : public Error {
public:
    using Error::Error;
};

// A computed quantity contradicts B(rho_0, rho_tau) <= l(tau) beyond tolerance.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// Malformed model / state documents; message carries line or field.
class FormatError : public Error {
public:
    using Error::Error;
};

// Raised by the speed-profile stage with the offending grid index.
class GridPointError : public Error {
public:
    GridPointError(std::size_t index, const std::string& what)
        : Error("grid index " + std::to_string(index) + ": " + what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace qsl
