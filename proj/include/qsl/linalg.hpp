#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace qsl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;
inline constexpr double kHermitianTol = 1e-12;

// Complex Hermitian matrix of dimension 2..8. Construction validates; use
// symmetrize() to project numerically computed data onto the Hermitian set.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Matrix m);

    static HermitianMatrix symmetrize(const Matrix& m);
    static HermitianMatrix zero(int dim);
    static HermitianMatrix identity(int dim);

    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }
    Complex trace() const { return m_.trace(); }

private:
    struct Unchecked {};
    HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

    Matrix m_;
};

// Eigen-decomposition with ascending eigenvalues; eigenvectors are columns.
struct Spectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

struct JacobiOptions {
    double off_tolerance = 1e-13;
    int max_sweeps = 100;
};

// Cyclic complex Jacobi. The off-diagonal threshold is measured relative to
// the Frobenius norm of the input so tiny-scale matrices keep full relative
// accuracy.
Spectrum eigh(const HermitianMatrix& a, const JacobiOptions& opts = {});

// Principal square root of a PSD matrix. Eigenvalues in (-1e-10, 0) are
// clamped to zero; anything below throws NotPsdError.
HermitianMatrix matrix_sqrt(const HermitianMatrix& a);

enum class NormKind { op, hs, tr };

std::string_view to_string(NormKind kind);
NormKind parse_norm_kind(std::string_view name);

double schatten_norm(const HermitianMatrix& a, NormKind which);

struct SchattenNorms {
    double op = 0.0;
    double hs = 0.0;
    double tr = 0.0;
    double get(NormKind kind) const;
};

// All three norms from a single eigensolve.
SchattenNorms schatten_norms(const HermitianMatrix& a);

// Largest |a_ij| over i != j.
double max_off_diagonal(const Matrix& a);

}  // namespace qsl
