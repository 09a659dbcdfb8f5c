#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "nlsist/fn.hpp"
#include "nlsist/mat2.hpp"
#include "nlsist/threads.hpp"

namespace nlsist {

// Potential q(x) with derived norms; the H^{1,1} estimate uses centered
// second-order differences and is diagnostic metadata, not a certified norm.
struct Potential {
    SampledFn q;
    double norm_l2 = 0.0;
    double norm_h11 = 0.0;

    static Potential from(SampledFn f) {
        f.check();
        Potential p;
        p.norm_l2 = f.norm_l2();
        p.norm_h11 = sobolev_estimate(f, 1, 1);
        p.q = std::move(f);
        return p;
    }

    // sqrt(||f||^2 + ||d^k f||^2 + ||x^j f||^2) with FD derivative.
    static double sobolev_estimate(const SampledFn& f, int k, int j) {
        const auto& g = f.grid;
        double s0 = 0, s1 = 0, s2 = 0;
        for (std::int64_t i = 0; i < g.n; ++i) {
            s0 += std::norm(f.values[std::size_t(i)]);
            if (k == 1) {
                const auto lo = f.values[std::size_t(std::max<std::int64_t>(i - 1, 0))];
                const auto hi = f.values[std::size_t(std::min<std::int64_t>(i + 1, g.n - 1))];
                s1 += std::norm((hi - lo) / (2.0 * g.step));
            }
            if (j == 1) s2 += std::norm(f.values[std::size_t(i)] * g.point(i));
        }
        return std::sqrt((s0 + s1 + s2) * g.step);
    }
};

enum class Direction { plus, minus };  // normalization end +inf / -inf

struct JostSolution {
    Direction direction;
    double z;
    UniformGrid grid;
    std::vector<Mat2> m_values;  // m at every grid point (cell midpoint)
    Mat2 m_far;                  // m at the far cell edge
};

namespace detail {

// One transfer-matrix cell: m -> exp(s(iz sigma + Q_k)) m diag(d, 1/d),
// s = dir*h*frac, d = e^{-dir i h frac z/2}; exact for cell-constant q.
inline Mat2 jost_cell(const Mat2& m, cplx qk, double z, double s, cplx d) {
    const Mat2 e = expm_traceless(cplx(0.0, s * z / 2.0), s * qk, s * std::conj(qk));
    Mat2 p = e * m;
    p.a11 *= d;
    p.a21 *= d;
    p.a12 /= d;
    p.a22 /= d;
    return p;
}

}  // namespace detail

// March the normalized Jost solution across the grid. m^(-) starts as I at the
// left cell edge and moves right; m^(+) starts at the right edge and moves left.
inline JostSolution solve_jost(const SampledFn& q, double z, Direction dir,
                               bool want_path = false) {
    const auto& g = q.grid;
    const int side = (dir == Direction::plus) ? +1 : -1;
    const double dirn = -side;
    const double h = g.step;
    const cplx dfull = std::exp(cplx(0.0, -dirn * h * z / 2.0));
    const cplx dhalf = std::exp(cplx(0.0, -dirn * (h / 2.0) * z / 2.0));

    JostSolution js{dir, z, g, {}, Mat2::identity()};
    if (want_path) js.m_values.resize(std::size_t(g.n));
    Mat2 m = Mat2::identity();
    for (std::int64_t i = 0; i < g.n; ++i) {
        const std::int64_t k = (side < 0) ? i : g.n - 1 - i;
        const cplx qk = q.values[std::size_t(k)];
        if (want_path) js.m_values[std::size_t(k)] = detail::jost_cell(m, qk, z, dirn * h * 0.5, dhalf);
        m = detail::jost_cell(m, qk, z, dirn * h, dfull);
    }
    js.m_far = m;
    return js;
}

// Scattering data on a z-grid with derived diagnostics.
struct ScatteringData {
    UniformGrid grid;
    std::vector<cplx> a, b, r;
    double rho = 0.0;        // sup |r|
    double lambda = 0.0;     // H^{1,0} estimate of r
    double eta = 0.0;        // H^{1,1} estimate of r
    double endpoint_agree = 0.0;  // max disagreement of the two edge evaluations

    SampledFn r_fn() const { return {grid, r}; }
    cplx transmission(std::int64_t k) const { return 1.0 / a[std::size_t(k)]; }

    double max_unimodularity_defect() const {  // |a|^2 - |b|^2 - 1
        double m = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            m = std::max(m, std::abs(std::norm(a[k]) - std::norm(b[k]) - 1.0));
        return m;
    }
};

inline cplx reflection_coefficient(cplx a, cplx b) { return -std::conj(b) / std::conj(a); }

// a, b evaluated from both Jost marches at their far edges; the two readings
// agree up to solver error (x-independence of the Wronskian) and the mean is
// reported.
inline void scattering_at(const SampledFn& q, double z, cplx& a_out, cplx& b_out,
                          double& agree_out) {
    const auto& g = q.grid;
    const double xr = g.right_edge(), xl = g.left_edge();
    const Mat2 mm = solve_jost(q, z, Direction::minus).m_far;
    const Mat2 mp = solve_jost(q, z, Direction::plus).m_far;
    const cplx a_m = mm.a22, a_p = mp.a11;
    const cplx b_m = -std::exp(cplx(0.0, xr * z)) * mm.a21;
    const cplx b_p = std::exp(cplx(0.0, xl * z)) * mp.a21;
    a_out = 0.5 * (a_m + a_p);
    b_out = 0.5 * (b_m + b_p);
    agree_out = std::max(std::abs(a_m - a_p), std::abs(b_m - b_p));
}

inline ScatteringData scattering_coefficients(const SampledFn& q, const UniformGrid& zgrid,
                                              int threads = 1) {
    ScatteringData sd;
    sd.grid = zgrid;
    sd.a.resize(std::size_t(zgrid.n));
    sd.b.resize(std::size_t(zgrid.n));
    sd.r.resize(std::size_t(zgrid.n));
    std::vector<double> agree(static_cast<std::size_t>(zgrid.n));
    parallel_for(zgrid.n, threads, [&](std::int64_t k) {
        scattering_at(q, zgrid.point(k), sd.a[std::size_t(k)], sd.b[std::size_t(k)],
                      agree[std::size_t(k)]);
        sd.r[std::size_t(k)] = reflection_coefficient(sd.a[std::size_t(k)], sd.b[std::size_t(k)]);
    });
    for (std::int64_t k = 0; k < zgrid.n; ++k) {
        sd.rho = std::max(sd.rho, std::abs(sd.r[std::size_t(k)]));
        sd.endpoint_agree = std::max(sd.endpoint_agree, agree[std::size_t(k)]);
    }
    const SampledFn rf{zgrid, sd.r};
    sd.lambda = Potential::sobolev_estimate(rf, 1, 0);
    sd.eta = Potential::sobolev_estimate(rf, 1, 1);
    return sd;
}

// Closed-form a, b for the box potential q = A on [0, L] (transfer matrix of a
// single constant cell).
inline void box_scattering(double z, double A, double L, cplx& a, cplx& b) {
    const cplx musq = cplx(A * A - z * z / 4.0, 0.0);
    const cplx mu = std::sqrt(musq);
    cplx shc;
    if (std::abs(mu) < 1e-8)
        shc = L * (1.0 + musq * (L * L) / 6.0);
    else
        shc = std::sinh(L * mu) / mu;
    const cplx ph = std::exp(cplx(0.0, L * z / 2.0));
    a = ph * (std::cosh(L * mu) - cplx(0.0, z / 2.0) * shc);
    b = -ph * A * shc;
}

// Box potential sampled by exact cell averages (overlap fraction of each cell
// with [0, L]).  Cell-averaged samples keep the z = 0 transfer product exact
// even when the box edges fall inside a cell: at z = 0 all cell matrices for a
// real potential commute, so only int q dx enters.
inline SampledFn box_potential(const UniformGrid& g, double A, double L) {
    SampledFn q{g, std::vector<cplx>(std::size_t(g.n))};
    for (std::int64_t k = 0; k < g.n; ++k) {
        const double lo = g.min + g.step * (double(k) - 0.5);
        const double hi = lo + g.step;
        const double overlap = std::max(0.0, std::min(hi, L) - std::max(lo, 0.0));
        q.values[std::size_t(k)] = A * overlap / g.step;
    }
    return q;
}

// Conservation-law functional: ||q||_2^2 = -(1/2pi) int log(1 - |r|^2) dz.
inline double trace_integral(const SampledFn& r) {
    double s = 0.0;
    for (const auto& v : r.values) s += std::log1p(-std::norm(v));
    return -s * r.grid.step / (2.0 * M_PI);
}

}  // namespace nlsist
