#pragma once

#include "nlsist/delta.hpp"

namespace nlsist {

namespace detail {

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
inline constexpr double kGl8X[8] = {-0.9602898564975363, -0.7966664774136267,
                                    -0.5255324099163290, -0.1834346424956498,
                                    0.1834346424956498,  0.5255324099163290,
                                    0.7966664774136267,  0.9602898564975363};
inline constexpr double kGl8W[8] = {0.1012285362903763, 0.2223810344533745,
                                    0.3137066458778873, 0.3626837833783620,
                                    0.3626837833783620, 0.3137066458778873,
                                    0.2223810344533745, 0.1012285362903763};

// Segment edges on (0, zmax]: geometric growth through the stationary point's
// neighborhood, then phase-controlled steps keeping t z dz <= pi/2.
inline std::vector<double> probe_edges(double t, double zmax) {
    std::vector<double> e;
    double z = 1e-9 * zmax;
    e.push_back(z);
    while (z < 0.02) {
        z *= 2.0;
        e.push_back(std::min(z, zmax));
    }
    while (z < zmax) {
        z += std::min(0.21, M_PI / (2.0 * t * z));
        e.push_back(std::min(z, zmax));
    }
    return e;
}

}  // namespace detail

// int f(z) Delta^{sign}(z) e^{-sign i t z^2} dz over the real line, truncated
// at zmax where f must already be negligible. Delta = delta_+ delta_- is
// unimodular; the table carries its phase.
inline cplx oscillatory_decay_probe(const SampledFn& f, const DeltaTable& table, double t,
                                    int sign, double zmax = 7.0) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("probe: sign must be +-1");
    if (!(t > 0.0)) throw std::invalid_argument("probe: t <= 0");
    const double fmax = f.max_abs();
    if (std::abs(f.at(zmax)) > 1e-8 * fmax || std::abs(f.at(-zmax)) > 1e-8 * fmax ||
        f.grid.right_edge() < zmax || f.grid.left_edge() > -zmax)
        throw std::runtime_error("probe: integrand not negligible at the quadrature cutoff");

    const auto edges = detail::probe_edges(t, zmax);
    cplx acc{};
    auto add_segment = [&](double a, double b) {
        const double m = 0.5 * (a + b), h = 0.5 * (b - a);
        cplx s{};
        for (int i = 0; i < 8; ++i) {
            const double z = m + h * detail::kGl8X[i];
            const cplx val = f.at(z) * table.value(z, sign) *
                             std::polar(1.0, -double(sign) * t * z * z);
            s += detail::kGl8W[i] * val;
        }
        acc += h * s;
    };
    add_segment(-edges[0], edges[0]);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        add_segment(edges[k], edges[k + 1]);
        add_segment(-edges[k + 1], -edges[k]);
    }
    return acc;
}

inline cplx oscillatory_decay_probe(const SampledFn& f, const SampledFn& r, double t, int sign,
                                    double zmax = 7.0) {
    const DeltaTable table = build_delta_table(r, 0.0);  // z0 = 0 convention
    return oscillatory_decay_probe(f, table, t, sign, zmax);
}

}  // namespace nlsist
