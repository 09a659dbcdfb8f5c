#pragma once

#include "nlsist/fft.hpp"

namespace nlsist {

struct FieldState {
    UniformGrid grid;
    std::vector<cplx> q;
    double t = 0.0;
};

struct StepperConfig {
    double dt = 1e-3;
};

namespace detail {

// Largest spectral magnitude within 5% of the Nyquist band over the peak
// magnitude; > 1e-8 means the grid no longer resolves the field.
inline double spectral_tail_fraction(const std::vector<cplx>& q) {
    std::vector<cplx> v(q);
    dft_inplace(v, -1);
    const std::int64_t n = std::int64_t(v.size()), half = n / 2;
    const auto guard = std::int64_t(double(n) * 0.05);
    double peak = 0.0, tail = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        const double a = std::abs(v[std::size_t(j)]);
        peak = std::max(peak, a);
        const std::int64_t dist = std::abs(j - half);  // distance to the Nyquist bin
        if (dist <= guard) tail = std::max(tail, a);
    }
    return peak > 0.0 ? tail / peak : 0.0;
}

}  // namespace detail

// Strang splitting for i q_t = -q_xx + 2|q|^2 q on the periodic grid: exact
// free flow (multiplier e^{-i xi^2 dt}) alternated with the exact nonlinear
// phase rotation q -> q e^{-2i|q|^2 dt}; half kicks fused across the loop.
inline FieldState split_step_evolve(const FieldState& s0, double t_final,
                                    const StepperConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("split_step_evolve: dt <= 0");
    if (t_final < s0.t - 1e-12) throw std::invalid_argument("split_step_evolve: t_final < t");
    if (s0.q.size() != std::size_t(s0.grid.n))
        throw std::invalid_argument("split_step_evolve: sample count mismatch");
    if (!all_finite(s0.q)) throw std::invalid_argument("split_step_evolve: non-finite input");
    if (detail::spectral_tail_fraction(s0.q) > 1e-8)
        throw std::runtime_error("split_step_evolve: spectral tail above 1e-8 of peak");

    const double duration = std::max(0.0, t_final - s0.t);
    auto n_full = std::int64_t(std::floor(duration / cfg.dt + 1e-9));
    double rem = duration - double(n_full) * cfg.dt;
    if (rem < 1e-9 * cfg.dt) rem = 0.0;

    FieldState out{s0.grid, s0.q, t_final};
    const std::int64_t n = s0.grid.n;
    InplaceFft fft(n);
    cplx* v = fft.data();
    std::copy(out.q.begin(), out.q.end(), v);

    const double dxi = s0.grid.dual().step;
    auto run_leg = [&](double dt, std::int64_t steps) {
        if (steps == 0) return;
        std::vector<cplx> mult(static_cast<std::size_t>(n));
        for (std::int64_t j = 0; j < n; ++j) {
            const double xi = double(j <= n / 2 ? j : j - n) * dxi;
            mult[std::size_t(j)] = std::polar(1.0 / double(n), -xi * xi * dt);  // 1/n: IDFT scale
        }
        for (std::int64_t k = 0; k < n; ++k) {
            const double a = std::norm(v[k]);
            v[k] *= std::polar(1.0, -dt * a);  // leading half kick
        }
        for (std::int64_t s = 0; s < steps; ++s) {
            fft.forward();
            for (std::int64_t k = 0; k < n; ++k) v[k] *= mult[std::size_t(k)];
            fft.backward();
            const double w = (s + 1 < steps) ? 2.0 * dt : dt;  // interior full kick, trailing half
            for (std::int64_t k = 0; k < n; ++k) v[k] *= std::polar(1.0, -w * std::norm(v[k]));
        }
    };
    run_leg(cfg.dt, n_full);
    if (rem > 0.0) run_leg(rem, 1);

    std::copy(v, v + n, out.q.begin());
    if (detail::spectral_tail_fraction(out.q) > 1e-8)
        throw std::runtime_error("split_step_evolve: spectral tail above 1e-8 of peak");
    return out;
}

}  // namespace nlsist
