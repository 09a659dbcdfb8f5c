#pragma once

#include <cmath>
#include <complex>

namespace nlsist {

// Dense complex 2x2 matrix; enough linear algebra for the 2x2 spectral problem.
struct Mat2 {
    std::complex<double> a11{}, a12{}, a21{}, a22{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    friend Mat2 operator*(const Mat2& A, const Mat2& B) {
        return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
    }
    friend Mat2 operator+(const Mat2& A, const Mat2& B) {
        return {A.a11 + B.a11, A.a12 + B.a12, A.a21 + B.a21, A.a22 + B.a22};
    }
    friend Mat2 operator-(const Mat2& A, const Mat2& B) {
        return {A.a11 - B.a11, A.a12 - B.a12, A.a21 - B.a21, A.a22 - B.a22};
    }
    friend Mat2 operator*(std::complex<double> c, const Mat2& A) {
        return {c * A.a11, c * A.a12, c * A.a21, c * A.a22};
    }

    std::complex<double> det() const { return a11 * a22 - a12 * a21; }

    Mat2 inverse() const {
        const auto d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    Mat2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }

    double frob_norm() const {
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
    }

    double max_abs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }
};

// sigma = diag(1/2, -1/2); ad sigma zeroes the diagonal and maps the
// off-diagonal pair (b, c) to (b, -c); e^{theta ad sigma} scales the (1,2)
// entry by e^{theta} and the (2,1) entry by e^{-theta}.
inline Mat2 ad_sigma(const Mat2& A) { return {0.0, A.a12, -A.a21, 0.0}; }

inline Mat2 exp_ad_sigma(std::complex<double> theta, const Mat2& A) {
    return {A.a11, std::exp(theta) * A.a12, std::exp(-theta) * A.a21, A.a22};
}

// exp of a traceless matrix [[a, b], [c, -a]]: cosh(mu) I + sinhc(mu) M with
// mu^2 = a^2 + bc; the sinhc series keeps small-|mu| cells exact to roundoff.
inline Mat2 expm_traceless(std::complex<double> a, std::complex<double> b,
                           std::complex<double> c) {
    const auto musq = a * a + b * c;
    const auto mu = std::sqrt(musq);
    std::complex<double> ch, shc;
    if (std::abs(mu) < 1e-6) {
        ch = 1.0 + musq / 2.0 + musq * musq / 24.0;
        shc = 1.0 + musq / 6.0 + musq * musq / 120.0;
    } else {
        ch = std::cosh(mu);
        shc = std::sinh(mu) / mu;
    }
    return {ch + a * shc, b * shc, c * shc, ch - a * shc};
}

}  // namespace nlsist
