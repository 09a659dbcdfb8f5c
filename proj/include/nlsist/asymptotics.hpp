#pragma once

#include "nlsist/delta.hpp"
#include "nlsist/loggamma.hpp"

namespace nlsist {

struct ArgBreakdown {
    double integral_term = 0.0;  // (1/pi) int log(z0-s) d phi
    double gamma_term = 0.0;     // pi/4 + arg Gamma(i nu)
    double r_term = 0.0;         // arg r(z0)
};

struct AsymptoticParams {
    double z0 = 0.0;
    double nu = 0.0;
    cplx alpha;
    ArgBreakdown arg_breakdown;
};

inline double stationary_point(double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("stationary_point: t <= 0");
    return x / (2.0 * t);
}

inline double nu(const SampledFn& r, double z0) {
    const double a2 = std::norm(r.at(z0));  // linear interpolation between nodes
    if (a2 >= 1.0) throw std::invalid_argument("nu: |r(z0)| >= 1");
    return -std::log1p(-a2) / (2.0 * M_PI);
}

namespace detail {

// int_{-inf}^{z0} log(z0 - s) d phi, integrated by parts with an exact split
// at z0 - 1 so both boundary terms vanish (log(1) = 0 at the seam; phi - phi0
// vanishes at z0):
//   int_{-inf}^{z0-1} phi/(z0-s) ds + int_{z0-1}^{z0} (phi - phi(z0))/(z0-s) ds.
// phi is the piecewise-linear interpolant; every piece is integrated exactly.
inline double arg_integral(const std::vector<double>& phi, const UniformGrid& g, double z0) {
    if (!(g.point(0) < z0 - 1.0))
        throw std::invalid_argument("alpha: grid does not cover (-inf, z0] adequately");
    // far part: phi/(z0 - s) = -phi/(s - z0) up to the cutoff z0 - 1
    const double far = -pv_cauchy_phi(phi, g, z0 - 1.0, z0);

    // near part over [z0-1, z0]: per piece [a,b] with values (fa - phi0) and
    // slope c1, int = A log((z0-a)/(z0-b)) - c1 (b-a), A = fa - phi0 + c1 (z0-a);
    // on the piece containing z0, A = 0 analytically and the piece reduces to
    // -c1 (z0 - a).
    const double phi0 = phi_interp(phi, g, z0);
    const auto n = std::int64_t(phi.size());
    double near = 0.0;
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        double a = g.point(k), b = g.point(k + 1);
        if (b <= z0 - 1.0) continue;
        if (a >= z0) break;
        const double c1 = (phi[std::size_t(k + 1)] - phi[std::size_t(k)]) / (b - a);
        double fa = phi[std::size_t(k)];
        if (a < z0 - 1.0) {
            fa += c1 * (z0 - 1.0 - a);
            a = z0 - 1.0;
        }
        if (b >= z0) {
            near += -c1 * (z0 - a);
            break;
        }
        const double A = fa - phi0 + c1 * (z0 - a);
        near += A * std::log((z0 - a) / (z0 - b)) - c1 * (b - a);
    }
    return far + near;
}

}  // namespace detail

// Modulus sqrt(nu/2); argument = (1/pi) int log(z0-s) d log(1-|r|^2)
// + pi/4 + arg Gamma(i nu) + arg r(z0).
inline AsymptoticParams alpha(const SampledFn& r, double z0) {
    r.check();
    if (r.endpoint_abs() > 1e-3)
        throw std::invalid_argument("alpha: r does not decay at the grid ends");
    AsymptoticParams p;
    p.z0 = z0;
    const cplx rz0 = r.at(z0);
    if (std::norm(rz0) >= 1.0) throw std::invalid_argument("alpha: |r(z0)| >= 1");
    p.nu = -std::log1p(-std::norm(rz0)) / (2.0 * M_PI);

    const auto phi = detail::phi_samples(r);
    p.arg_breakdown.integral_term = detail::arg_integral(phi, r.grid, z0) / M_PI;
    p.arg_breakdown.gamma_term = 0.25 * M_PI + arg_gamma_imag_axis(p.nu);
    p.arg_breakdown.r_term = std::arg(rz0);
    const double arg = p.arg_breakdown.integral_term + p.arg_breakdown.gamma_term +
                       p.arg_breakdown.r_term;
    p.alpha = std::polar(std::sqrt(p.nu / 2.0), arg);
    if (p.nu == 0.0) p.alpha = cplx{};
    return p;
}

// Leading-order long-time profile: t^{-1/2} alpha(z0) e^{i x^2/(4t) - i nu log 2t}.
inline cplx q_asymptotic(const SampledFn& r, double x, double t) {
    const double z0 = stationary_point(x, t);
    const AsymptoticParams p = alpha(r, z0);
    if (p.nu == 0.0) return cplx{};
    return (1.0 / std::sqrt(t)) * p.alpha *
           std::polar(1.0, x * x / (4.0 * t) - p.nu * std::log(2.0 * t));
}

}  // namespace nlsist
