#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "eigencone/matrix.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/spectrum.hpp"

namespace eigencone {

/// Haar-distributed random unitary: a complex Ginibre matrix orthonormalized
/// column by column with doubled Gram-Schmidt. Dividing each column by its
/// positive norm fixes the phase convention, so the distribution is exactly
/// the Haar measure, not Haar-up-to-diagonal-phases.
inline ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
    ComplexMatrix Q(n);
    ComplexMatrix Z(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double a, b;
            rng.gaussian_pair(a, b);
            Z(i, j) = Complex(a, b);
        }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Z(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                Complex r(0, 0);
                for (std::size_t i = 0; i < n; ++i) r += std::conj(Q(i, k)) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= r * Q(i, k);
            }
        double norm2 = 0;
        for (const Complex& z : v) norm2 += std::norm(z);
        if (norm2 < 1e-16) {
            // Astronomically unlikely near-dependence: redraw this column
            // from the same stream and restart its orthogonalization.
            for (std::size_t i = 0; i < n; ++i) {
                double a, b;
                rng.gaussian_pair(a, b);
                Z(i, j) = Complex(a, b);
            }
            --j;
            continue;
        }
        const double inv = 1 / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i) Q(i, j) = v[i] * inv;
    }
    return Q;
}

/// Hermitian matrix with the prescribed spectrum in the eigenbasis given by
/// the columns of U: U diag(s) U*, symmetrized to exact Hermitian storage.
inline ComplexMatrix hermitian_with_spectrum(const Spectrum& s, const ComplexMatrix& U) {
    const std::size_t n = s.size();
    if (U.size() != n) throw std::invalid_argument("spectrum and basis sizes differ");
    if (U.unitarity_defect() > 1e-8)
        throw std::invalid_argument("eigenbasis matrix is not unitary");
    ComplexMatrix UD(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) UD(i, j) = U(i, j) * s[j];
    return (UD * U.adjoint()).hermitized();
}

/// Unitary matrix whose eigenvalue angles are the prescribed normalized
/// spectrum: U diag(e^{2 pi i s_j}) U*. The angle sum must be an integer
/// (the determinant has to land on a well-defined phase).
inline ComplexMatrix unitary_with_spectrum(const Spectrum& s, const ComplexMatrix& U) {
    const std::size_t n = s.size();
    if (U.size() != n) throw std::invalid_argument("spectrum and basis sizes differ");
    if (U.unitarity_defect() > 1e-8)
        throw std::invalid_argument("eigenbasis matrix is not unitary");
    const double total = s.sum();
    if (std::abs(total - std::round(total)) > 1e-9)
        throw std::invalid_argument("angle sum must be an integer");
    ComplexMatrix UD(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double theta = 2 * std::numbers::pi * s[j];
            UD(i, j) = U(i, j) * Complex(std::cos(theta), std::sin(theta));
        }
    return UD * U.adjoint();
}

}  // namespace eigencone
