#pragma once

#include <string>
#include <vector>

#include "nlsist/fft.hpp"
#include "nlsist/fn.hpp"

namespace nlsist {

enum class Side { plus, minus };

struct WarningSink {
    std::vector<std::string> notes;
    void add(std::string s) { notes.push_back(std::move(s)); }
};

inline void check_endpoint_decay(const SampledFn& h, WarningSink* warn, const char* who,
                                 double rel_tol = 1e-6) {
    if (!warn) return;
    const double m = h.max_abs();
    const double e = h.endpoint_abs();
    if (m > 0.0 && e > rel_tol * m)
        warn->add(std::string(who) + ": endpoint magnitude " + std::to_string(e) +
                  " exceeds " + std::to_string(rel_tol) + "*max|h|");
}

namespace detail {

// Multiply the spectrum by a Hardy-side symbol. The xi = 0 bin carries the
// trapezoid half-weight of the spectral cut: C+ takes 1/2, C- takes -1/2, the
// Hilbert symbol is 0 there. This keeps C+ - C- = 1, H = -(C+ + C-), and the
// contraction bound exact bin by bin, and makes the discrete operators match
// the continuum ones to O(dxi^2) instead of leaving an O(dxi) mean bias; the
// price is that C+ halves a constant rather than fixing it, so idempotence
// holds exactly only on mean-free input.
template <class Mult>
SampledFn spectral_multiplier(const SampledFn& h, Mult mult) {
    SampledFn fh = fourier_forward(h);
    const std::int64_t m = fh.grid.n / 2;  // index of the xi = 0 bin
    for (std::int64_t j = 0; j < fh.grid.n; ++j)
        fh.values[std::size_t(j)] *= mult(j < m ? -1 : j == m ? 0 : 1);
    return fourier_inverse(fh);
}

}  // namespace detail

// Boundary values of the Cauchy integral: C+ keeps the upper Hardy component,
// C- is minus the lower one, so C+ - C- = 1 and both are contractions.
inline SampledFn cauchy_boundary(const SampledFn& h, Side side, WarningSink* warn = nullptr) {
    check_endpoint_decay(h, warn, "cauchy_boundary");
    if (side == Side::plus)
        return detail::spectral_multiplier(h, [](int s) { return s > 0 ? 1.0 : s == 0 ? 0.5 : 0.0; });
    return detail::spectral_multiplier(h, [](int s) { return s > 0 ? 0.0 : s == 0 ? -0.5 : -1.0; });
}

// Hilbert transform under the ds/(i pi) kernel normalization: H = -(C+ + C-).
inline SampledFn hilbert(const SampledFn& h, WarningSink* warn = nullptr) {
    check_endpoint_decay(h, warn, "hilbert");
    return detail::spectral_multiplier(h, [](int s) { return s > 0 ? -1.0 : s == 0 ? 0.0 : 1.0; });
}

// (1/2pi i) int h(s)/(s - z) ds for z off the contour. Trapezoid on the grid
// plus a c/s^2 tail model matched to the endpoint samples; exact antiderivative
// of 1/(s^2 (s-z)) supplies the tail terms.
inline cplx cauchy_offcontour(const SampledFn& h, cplx z) {
    h.check();
    if (z.imag() == 0.0) throw std::invalid_argument("cauchy_offcontour: z on the contour");
    const auto& g = h.grid;
    cplx acc{};
    for (std::int64_t k = 0; k < g.n; ++k)
        acc += h.values[std::size_t(k)] / (g.point(k) - z);
    acc *= g.step;
    const double zl = g.point(0), zr = g.point(g.n - 1);
    const cplx cl = h.values.front() * (zl * zl), cr = h.values.back() * (zr * zr);
    acc += cr * (-std::log(1.0 - z / zr) / (z * z) - 1.0 / (z * zr));
    acc += cl * (std::log(1.0 - z / zl) / (z * z) + 1.0 / (z * zl));
    return acc / (cplx(0.0, 2.0 * M_PI));
}

}  // namespace nlsist
