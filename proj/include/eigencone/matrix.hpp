#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eigencone {

using Complex = std::complex<double>;

/// Dense square complex matrix, row major. Sized for small spectra work;
/// no attempt at cache blocking or vectorization.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex(0, 0)) {
        if (n == 0) throw std::invalid_argument("matrix size must be >= 1");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix sizes differ");
        ComplexMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0, 0)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix sizes differ");
        ComplexMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_ * a.n_; ++i) out.data_[i] = a.data_[i] + b.data_[i];
        return out;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix sizes differ");
        ComplexMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_ * a.n_; ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }

    ComplexMatrix scaled(Complex s) const {
        ComplexMatrix out(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] * s;
        return out;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const Complex& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0;
        for (const Complex& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    /// Largest entry of |A*A - I|; zero for exactly unitary input.
    double unitarity_defect() const {
        ComplexMatrix d = adjoint() * (*this) - identity(n_);
        return d.max_abs();
    }

    /// Largest entry of |A - A*|.
    double hermiticity_defect() const {
        double m = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    /// (A + A*)/2: exactly Hermitian in storage.
    ComplexMatrix hermitized() const {
        ComplexMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out(i, i) = Complex((*this)(i, i).real(), 0);
            for (std::size_t j = i + 1; j < n_; ++j) {
                Complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
                out(i, j) = v;
                out(j, i) = std::conj(v);
            }
        }
        return out;
    }

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

}  // namespace eigencone
