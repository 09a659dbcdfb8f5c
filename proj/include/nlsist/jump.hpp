#pragma once

#include <stdexcept>

#include "nlsist/fn.hpp"
#include "nlsist/mat2.hpp"

namespace nlsist {

// r(z, t) = e^{-i z^2 t} r0(z): the unimodular linear-flow multiplier.
inline SampledFn evolve_reflection(const SampledFn& r0, double t) {
    if (t < 0.0) throw std::invalid_argument("evolve_reflection: t < 0");
    SampledFn out = r0;
    for (std::int64_t k = 0; k < out.grid.n; ++k) {
        const double z = out.grid.point(k);
        out.values[std::size_t(k)] *= std::exp(cplx(0.0, -z * z * t));
    }
    return out;
}

// Factorized jump data at fixed (x, t): theta = xz - tz^2,
// w^- carries r e^{i theta} in the (1,2) slot, w^+ carries -conj(r) e^{-i theta}
// in the (2,1) slot, and v = (I - w^-)^{-1} (I + w^+) has det 1 identically.
struct JumpData {
    SampledFn r;
    double x = 0.0, t = 0.0;
    SampledFn theta;
    SampledMatrixFn w_minus, w_plus;

    // R = r e^{i theta}: the only scalar the solver needs.
    std::vector<cplx> R;

    Mat2 v(std::int64_t k) const {
        const Mat2 wm = w_minus.values[std::size_t(k)];
        const Mat2 wp = w_plus.values[std::size_t(k)];
        return (Mat2::identity() - wm).inverse() * (Mat2::identity() + wp);
    }
};

inline JumpData build_jump(const SampledFn& r, double x, double t) {
    r.check();
    JumpData jd;
    jd.r = r;
    jd.x = x;
    jd.t = t;
    jd.theta = SampledFn(r.grid);
    jd.w_minus = SampledMatrixFn(r.grid);
    jd.w_plus = SampledMatrixFn(r.grid);
    jd.R.resize(std::size_t(r.grid.n));
    double rho = 0.0;
    for (std::int64_t k = 0; k < r.grid.n; ++k) {
        const double z = r.grid.point(k);
        const double th = x * z - t * z * z;
        const cplx rk = r.values[std::size_t(k)];
        rho = std::max(rho, std::abs(rk));
        const cplx Rk = rk * std::exp(cplx(0.0, th));
        jd.theta.values[std::size_t(k)] = th;
        jd.R[std::size_t(k)] = Rk;
        jd.w_minus.values[std::size_t(k)] = Mat2{0.0, Rk, 0.0, 0.0};
        jd.w_plus.values[std::size_t(k)] = Mat2{0.0, 0.0, -std::conj(Rk), 0.0};
    }
    if (rho >= 1.0) throw std::invalid_argument("build_jump: sup|r| >= 1");
    return jd;
}

}  // namespace nlsist
