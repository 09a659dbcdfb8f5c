#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace nlsist {

using cplx = std::complex<double>;

// Principal-branch log Gamma via the Lanczos approximation (g = 7, 9 terms),
// with the reflection formula for Re z < 0.5. Accurate to ~1e-13 relative on
// the strip used here (arguments i*nu and 1 + i*nu with nu real).
inline cplx log_gamma(cplx z) {
    static const double c[9] = {0.99999999999980993,    676.5203681218851,
                                -1259.1392167224028,    771.32342877765313,
                                -176.61502916214059,    12.507343278686905,
                                -0.13857109526572012,   9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        const cplx s = std::sin(M_PI * z);
        if (s == cplx{}) throw std::domain_error("log_gamma: pole");
        return std::log(M_PI) - std::log(s) - log_gamma(1.0 - z);
    }
    const cplx zm1 = z - 1.0;
    cplx a = c[0];
    for (int k = 1; k < 9; ++k) a += c[k] / (zm1 + double(k));
    const cplx t = zm1 + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + std::log(a) + (zm1 + 0.5) * std::log(t) - t;
}

// arg Gamma(i nu), continuous in nu >= 0 with the limit -pi/2 at nu = 0.
// Reflection gives Im log Gamma(i nu) = -pi/2 - Im log Gamma(1 - i nu)
// - Im log(sinh(pi nu)) with the sinh term real, so only the -pi/2 and the
// regular factor contribute to the argument.
inline double arg_gamma_imag_axis(double nu) {
    if (nu < 0.0) throw std::domain_error("arg_gamma_imag_axis: nu < 0");
    if (nu == 0.0) return -0.5 * M_PI;
    // sin(pi i nu) = i sinh(pi nu): log = log(sinh(pi nu)) + i pi/2
    const cplx lg = log_gamma(cplx(1.0, -nu));
    return -0.5 * M_PI - lg.imag();
}

}  // namespace nlsist
