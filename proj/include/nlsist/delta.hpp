#pragma once

#include <algorithm>

#include "nlsist/fn.hpp"

namespace nlsist {

enum class DeltaSide { plus, minus, off };

struct DeltaEval {
    cplx z;
    cplx value;
    DeltaSide side = DeltaSide::off;
};

namespace detail {

// phi = log(1 - |r|^2) on the sample grid; throws when sup|r| reaches 1.
inline std::vector<double> phi_samples(const SampledFn& r) {
    std::vector<double> phi(r.values.size());
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double a2 = std::norm(r.values[k]);
        if (a2 >= 1.0) throw std::invalid_argument("delta: sup|r| >= 1");
        phi[k] = std::log1p(-a2);
    }
    return phi;
}

inline double phi_interp(const std::vector<double>& phi, const UniformGrid& g, double x) {
    const double u = (x - g.min) / g.step;
    if (u <= 0.0) return phi.front() * std::max(0.0, 1.0 + u);  // taper to 0 off-grid
    const auto n = std::int64_t(phi.size());
    if (u >= double(n - 1)) return phi.back() * std::max(0.0, 1.0 - (u - double(n - 1)));
    const auto j = std::int64_t(u);
    const double f = u - double(j);
    return phi[std::size_t(j)] * (1.0 - f) + phi[std::size_t(j + 1)] * f;
}

// Integrals of the piecewise-linear interpolant of phi over (-inf, z0]
// against the Cauchy kernel, each linear piece integrated in closed form:
//   int_a^b (fa + c1 (s-a)) / (s-z) ds
//     = c1 (b-a) + (fa + c1 (z-a)) (log(b-z) - log(a-z)).
// For real z the log-magnitude difference realizes the principal value in
// every configuration (z inside or outside the segment).
inline double pv_cauchy_phi(const std::vector<double>& phi, const UniformGrid& g, double z0,
                            double x) {
    const auto n = std::int64_t(phi.size());
    // nudge off exact node hits: the log coefficients cancel there in exact
    // arithmetic but produce inf - inf in floating point
    const auto jnear = std::int64_t(std::llround((x - g.min) / g.step));
    if (jnear >= 0 && jnear < n && std::abs(x - g.point(jnear)) < 1e-12 * std::max(1.0, std::abs(x)))
        x = g.point(jnear) + 1e-9 * g.step;
    double acc = 0.0;
    double prev_log = std::log(std::abs(g.point(0) - x));
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        const double a = g.point(k);
        double b = g.point(k + 1);
        double fa = phi[std::size_t(k)], fb = phi[std::size_t(k + 1)];
        bool last = false;
        if (b >= z0) {
            const double f0 = fa + (fb - fa) * (z0 - a) / (b - a);
            b = z0;
            fb = f0;
            last = true;
        }
        if (b > a) {
            const double c1 = (fb - fa) / (b - a);
            const double cur_log = std::log(std::abs(b - x));
            acc += c1 * (b - a) + (fa + c1 * (x - a)) * (cur_log - prev_log);
            prev_log = cur_log;
        }
        if (last) break;
    }
    return acc;
}

inline cplx cauchy_phi(const std::vector<double>& phi, const UniformGrid& g, double z0, cplx z) {
    const auto n = std::int64_t(phi.size());
    cplx acc{};
    cplx prev_log = std::log(cplx(g.point(0)) - z);
    for (std::int64_t k = 0; k + 1 < n; ++k) {
        const double a = g.point(k);
        double b = g.point(k + 1);
        double fa = phi[std::size_t(k)], fb = phi[std::size_t(k + 1)];
        bool last = false;
        if (b >= z0) {
            const double f0 = fa + (fb - fa) * (z0 - a) / (b - a);
            b = z0;
            fb = f0;
            last = true;
        }
        if (b > a) {
            const double c1 = (fb - fa) / (b - a);
            const cplx cur_log = std::log(cplx(b) - z);
            acc += c1 * (b - a) + (fa + c1 * (z - a)) * (cur_log - prev_log);
            prev_log = cur_log;
        }
        if (last) break;
    }
    return acc;
}

}  // namespace detail

// Partial transmission factor: delta(z) = exp((1/2 pi i) int_{-inf}^{z0}
// log(1-|r|^2)/(s-z) ds). On the cut (real z < z0) the side selects the
// one-sided boundary value via the half-residue term; elsewhere the integral
// is evaluated directly.
inline DeltaEval delta(const SampledFn& r, double z0, cplx z, DeltaSide side) {
    r.check();
    const auto phi = detail::phi_samples(r);
    const auto& g = r.grid;
    if (z.imag() != 0.0) {
        if (side != DeltaSide::off)
            throw std::invalid_argument("delta: one-sided value requested off the contour");
        const cplx I = detail::cauchy_phi(phi, g, z0, z);
        return {z, std::exp(cplx(0.0, -1.0 / (2.0 * M_PI)) * I), DeltaSide::off};
    }
    const double x = z.real();
    if (x == z0) throw std::domain_error("delta: z coincides with z0");
    if (x < z0 && side == DeltaSide::off)
        throw std::invalid_argument("delta: z on the cut requires side plus or minus");
    const double pv = detail::pv_cauchy_phi(phi, g, z0, x);
    cplx E{0.0, -pv / (2.0 * M_PI)};
    DeltaSide out_side = side;
    if (x < z0) {
        const double ph = detail::phi_interp(phi, g, x);
        E += (side == DeltaSide::plus ? 0.5 : -0.5) * ph;
    } else {
        out_side = DeltaSide::off;  // continuous across the axis right of z0
    }
    return {z, std::exp(E), out_side};
}

// Dense table of the principal-value phase with the log kink at z0 subtracted,
// for fast unimodular Delta = delta_+ delta_- evaluation inside the probe:
//   Delta(x) = exp(-i F(x)/pi),  F(x) = PV int phi/(s-x) ds.
struct DeltaTable {
    double z0 = 0.0, phi0 = 0.0;
    UniformGrid tg{0.0, 1.0, 2};
    std::vector<double> p;  // F - phi0 log|x - z0| at table nodes

    double phase(double x) const {
        const double u = (x - tg.min) / tg.step;
        const auto n = std::int64_t(p.size());
        const auto j = std::clamp<std::int64_t>(std::int64_t(std::floor(u)), 0, n - 2);
        const double t = u - double(j);
        auto at = [&](std::int64_t i) { return p[std::size_t(std::clamp<std::int64_t>(i, 0, n - 1))]; };
        const double p0 = at(j - 1), p1 = at(j), p2 = at(j + 1), p3 = at(j + 2);
        // uniform Catmull-Rom
        const double s =
            p1 + 0.5 * t *
                     (p2 - p0 +
                      t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + t * (3.0 * (p1 - p2) + p3 - p0)));
        return s + phi0 * std::log(std::abs(x - z0));
    }

    cplx value(double x, int exponent = +1) const {
        return std::polar(1.0, -double(exponent) * phase(x) / M_PI);
    }
};

inline DeltaTable build_delta_table(const SampledFn& r, double z0, double half_width = 24.0,
                                    std::int64_t nt = 9600) {
    r.check();
    const auto phi = detail::phi_samples(r);
    DeltaTable table;
    table.z0 = z0;
    table.phi0 = detail::phi_interp(phi, r.grid, z0);
    const double step = 2.0 * half_width / double(nt);
    table.tg = UniformGrid{z0 - step * double(nt - 1) / 2.0, step, nt};  // offset: no node at z0
    table.p.resize(std::size_t(nt));
    for (std::int64_t j = 0; j < nt; ++j) {
        const double x = table.tg.point(j);
        table.p[std::size_t(j)] =
            detail::pv_cauchy_phi(phi, r.grid, z0, x) - table.phi0 * std::log(std::abs(x - z0));
    }
    return table;
}

}  // namespace nlsist
