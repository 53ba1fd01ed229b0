#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "eigencone/matrix.hpp"
#include "eigencone/quantum.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/spectrum.hpp"

namespace eigencone {

struct EigenSystem {
    std::vector<double> values;  // sorted descending
    ComplexMatrix vectors;       // columns aligned with values
};

namespace detail {

/// Cyclic Jacobi sweeps on a Hermitian matrix: each rotation zeroes one
/// off-diagonal entry with a unitary 2x2 similarity; the off-diagonal
/// Frobenius mass decreases monotonically. Stops when that mass drops below
/// tol times the Frobenius norm of the input; gives up after max_sweeps.
inline EigenSystem jacobi_hermitian(ComplexMatrix M, double tol, int max_sweeps,
                                    bool want_vectors) {
    const std::size_t n = M.size();
    ComplexMatrix V = ComplexMatrix::identity(n);
    const double norm0 = M.frobenius_norm();

    auto off_norm = [&]() {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(M(i, j));
        return std::sqrt(s);
    };

    const double threshold = tol * norm0;
    int sweep = 0;
    while (norm0 > 0 && off_norm() > threshold) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("eigensolver did not converge");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = M(p, q);
                const double a = std::abs(apq);
                if (a == 0) continue;
                const double app = M(p, p).real(), aqq = M(q, q).real();
                const double tau = (aqq - app) / (2 * a);
                const double t = (tau >= 0 ? -1.0 : 1.0) /
                                 (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const Complex phase = apq / a;           // e^{i phi}
                const Complex sp = s * phase;            // s e^{i phi}
                const Complex sm = s * std::conj(phase); // s e^{-i phi}

                for (std::size_t k = 0; k < n; ++k) {    // M <- M G
                    const Complex xp = M(k, p), xq = M(k, q);
                    M(k, p) = c * xp + sm * xq;
                    M(k, q) = -sp * xp + c * xq;
                }
                for (std::size_t k = 0; k < n; ++k) {    // M <- G* M
                    const Complex xp = M(p, k), xq = M(q, k);
                    M(p, k) = c * xp + sp * xq;
                    M(q, k) = -sm * xp + c * xq;
                }
                M(p, p) = Complex(M(p, p).real(), 0);
                M(q, q) = Complex(M(q, q).real(), 0);
                M(p, q) = std::conj(M(q, p));
                if (want_vectors)
                    for (std::size_t k = 0; k < n; ++k) {  // V <- V G
                        const Complex xp = V(k, p), xq = V(k, q);
                        V(k, p) = c * xp + sm * xq;
                        V(k, q) = -sp * xp + c * xq;
                    }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return M(a, a).real() > M(b, b).real();
    });

    EigenSystem out{std::vector<double>(n), ComplexMatrix::identity(n)};
    for (std::size_t i = 0; i < n; ++i) out.values[i] = M(order[i], order[i]).real();
    if (want_vectors)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = V(i, order[j]);
    return out;
}

/// Fixed pseudo-random Hermitian matrix with unit-scale entries, used as a
/// deterministic degeneracy-breaking perturbation.
inline ComplexMatrix fixed_hermitian_noise(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix P(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a, b;
        rng.gaussian_pair(a, b);
        P(i, i) = Complex(a, 0);
        for (std::size_t j = i + 1; j < n; ++j) {
            rng.gaussian_pair(a, b);
            P(i, j) = Complex(a, b) * 0.7071067811865476;
            P(j, i) = std::conj(P(i, j));
        }
    }
    return P;
}

}  // namespace detail

/// Full eigensystem of a Hermitian matrix (values sorted descending,
/// eigenvector columns aligned). tol is the relative off-diagonal
/// convergence threshold; the input may deviate from exact Hermitian
/// symmetry by at most 1000*tol relative to its norm.
inline EigenSystem hermitian_eigensystem(const ComplexMatrix& M, double tol = 1e-13,
                                         bool want_vectors = true) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const double scale = std::max(1.0, M.frobenius_norm());
    if (M.hermiticity_defect() > 1000 * tol * scale)
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    return detail::jacobi_hermitian(M.hermitized(), tol, 100, want_vectors);
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
inline Spectrum eig_hermitian(const ComplexMatrix& M, double tol = 1e-13) {
    return Spectrum(hermitian_eigensystem(M, tol, false).values);
}

/// Normalized eigenvalue angles of a unitary matrix. The matrix is reduced
/// through the commuting Hermitian pair (M+M*)/2 and (M-M*)/(2i): a generic
/// fixed combination plus a 1e-11-scale deterministic perturbation is
/// diagonalized, eigenvalues are recovered as Rayleigh quotients of M, and
/// their angles are normalized. A second fixed combination is tried if the
/// first one hits a degeneracy; both tries failing is an error.
inline UnitaryLift eig_unitary(const ComplexMatrix& M, double tol = 1e-8) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (M.unitarity_defect() > std::max(tol, 1e-10))
        throw std::invalid_argument("matrix is not unitary within tolerance");
    const std::size_t n = M.size();

    const ComplexMatrix re = (M + M.adjoint()).scaled(0.5).hermitized();
    const ComplexMatrix im = (M - M.adjoint()).scaled(Complex(0, -0.5)).hermitized();
    const ComplexMatrix noise = detail::fixed_hermitian_noise(n, 0x5eedf00dULL);

    for (double rho : {0.6180339887498949, 0.3819660112501051}) {
        ComplexMatrix K = (re + im.scaled(rho) + noise.scaled(1e-11)).hermitized();
        EigenSystem es = detail::jacobi_hermitian(K, 1e-13, 100, true);

        std::vector<double> angles(n);
        bool clean = true;
        for (std::size_t k = 0; k < n && clean; ++k) {
            std::vector<Complex> v(n), mv(n, Complex(0, 0));
            for (std::size_t i = 0; i < n; ++i) v[i] = es.vectors(i, k);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) mv[i] += M(i, j) * v[j];
            Complex mu(0, 0);
            for (std::size_t i = 0; i < n; ++i) mu += std::conj(v[i]) * mv[i];
            double residual = 0;
            for (std::size_t i = 0; i < n; ++i) residual += std::norm(mv[i] - mu * v[i]);
            if (std::sqrt(residual) > 1e-7 || std::abs(std::abs(mu) - 1.0) > 1e-6)
                clean = false;
            angles[k] = std::atan2(mu.imag(), mu.real()) / (2 * std::numbers::pi);
        }
        if (clean) return normalize_unitary_spectrum(angles, std::max(tol, 1e-8));
    }
    throw std::runtime_error("unitary eigenvalue extraction hit a persistent degeneracy");
}

/// Singular values of M, sorted descending: square roots of the spectrum
/// of M*M with tiny negative roundoff clamped to zero.
inline Spectrum singular_spectrum(const ComplexMatrix& M) {
    Spectrum ev = eig_hermitian((M.adjoint() * M).hermitized());
    std::vector<double> s(ev.values());
    for (double& v : s) v = std::sqrt(std::max(0.0, v));
    return Spectrum(std::move(s));
}

}  // namespace eigencone
