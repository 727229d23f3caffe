#include "qsl/linalg.hpp"

#include "qsl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace qsl {

namespace {

void check_shape(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("matrix must be square, got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    if (m.rows() < kMinDim || m.rows() > kMaxDim) {
        throw DimensionError("dimension " + std::to_string(m.rows()) + " outside supported range [2, 8]");
    }
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
    check_shape(m_);
    const int n = dim();
    for (int j = 0; j < n; ++j) {
        if (!std::isfinite(m_(j, j).real()) || !std::isfinite(m_(j, j).imag())) {
            throw InvalidMatrixError("non-finite entry on the diagonal");
        }
        if (std::abs(m_(j, j).imag()) > kHermitianTol) {
            throw InvalidMatrixError("diagonal entry " + std::to_string(j) + " has imaginary part " +
                                     std::to_string(m_(j, j).imag()));
        }
        for (int k = j + 1; k < n; ++k) {
            if (std::abs(m_(j, k) - std::conj(m_(k, j))) > kHermitianTol) {
                throw InvalidMatrixError("entries (" + std::to_string(j) + "," + std::to_string(k) +
                                         ") and its transpose are not conjugate");
            }
        }
    }
}

HermitianMatrix HermitianMatrix::symmetrize(const Matrix& m) {
    check_shape(m);
    Matrix h = 0.5 * (m + m.adjoint());
    for (int j = 0; j < h.rows(); ++j) h(j, j) = h(j, j).real();
    if (!h.allFinite()) throw InvalidMatrixError("non-finite matrix entry");
    return HermitianMatrix(std::move(h), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(int dim) {
    return HermitianMatrix(Matrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    return HermitianMatrix(Matrix::Identity(dim, dim));
}

double max_off_diagonal(const Matrix& a) {
    double off = 0.0;
    for (int j = 0; j < a.rows(); ++j)
        for (int k = 0; k < a.cols(); ++k)
            if (j != k) off = std::max(off, std::abs(a(j, k)));
    return off;
}

Spectrum eigh(const HermitianMatrix& input, const JacobiOptions& opts) {
    const int n = input.dim();
    Matrix a = input.matrix();
    Matrix v = Matrix::Identity(n, n);

    const double scale = a.norm();
    const double threshold = opts.off_tolerance * scale;

    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        if (max_off_diagonal(a) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // Phase makes the (p,q) entry real, then a real rotation zeroes it.
                const Complex phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // U restricted to (p,q): [[c, s], [-s conj(phase), c conj(phase)]].
                const Complex u_qp = -s * std::conj(phase);
                const Complex u_qq = c * std::conj(phase);
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * c + akq * u_qp;
                    a(k, q) = akp * s + akq * u_qq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(u_qp) * aqk;
                    a(q, k) = s * apk + std::conj(u_qq) * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * u_qp;
                    v(k, q) = vkp * s + vkq * u_qq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    const double residual = max_off_diagonal(a);
    if (residual > threshold) throw EigenConvergenceError(residual, sweep);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    Spectrum out{RealVector(n), Matrix(n, n)};
    for (int k = 0; k < n; ++k) {
        out.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        out.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

HermitianMatrix matrix_sqrt(const HermitianMatrix& a) {
    const Spectrum spec = eigh(a);
    RealVector roots(spec.eigenvalues.size());
    // Eigenvalues at the rounding level of the largest one are zeros; taking
    // their square root would promote 1e-17 noise to 1e-9.
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() * spec.eigenvalues.cwiseAbs().maxCoeff();
    for (int k = 0; k < roots.size(); ++k) {
        const double lambda = spec.eigenvalues(k);
        if (lambda < -1e-10) throw NotPsdError(lambda);
        roots(k) = lambda <= noise ? 0.0 : std::sqrt(lambda);
    }
    const Matrix& v = spec.eigenvectors;
    return HermitianMatrix::symmetrize(v * roots.cast<Complex>().asDiagonal() * v.adjoint());
}

std::string_view to_string(NormKind kind) {
    switch (kind) {
        case NormKind::op: return "op";
        case NormKind::hs: return "hs";
        case NormKind::tr: return "tr";
    }
    return "?";
}

NormKind parse_norm_kind(std::string_view name) {
    if (name == "op") return NormKind::op;
    if (name == "hs") return NormKind::hs;
    if (name == "tr") return NormKind::tr;
    throw DomainError("unknown norm '" + std::string(name) + "' (expected op, hs or tr)");
}

double SchattenNorms::get(NormKind kind) const {
    switch (kind) {
        case NormKind::op: return op;
        case NormKind::hs: return hs;
        case NormKind::tr: return tr;
    }
    return 0.0;
}

SchattenNorms schatten_norms(const HermitianMatrix& a) {
    const RealVector lambda = eigh(a).eigenvalues;
    SchattenNorms n;
    double sq = 0.0;
    for (int k = 0; k < lambda.size(); ++k) {
        const double m = std::abs(lambda(k));
        n.op = std::max(n.op, m);
        n.tr += m;
        sq += m * m;
    }
    // Rounding can leave hs an ulp outside [op, tr]; the exact value is inside.
    n.hs = std::clamp(std::sqrt(sq), n.op, n.tr);
    return n;
}

double schatten_norm(const HermitianMatrix& a, NormKind which) {
    return schatten_norms(a).get(which);
}

}  // namespace qsl
