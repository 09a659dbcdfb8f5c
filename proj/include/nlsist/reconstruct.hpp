#pragma once

#include "nlsist/singular.hpp"
#include "nlsist/threads.hpp"

namespace nlsist {

struct ReconstructionResult {
    double t = 0.0;
    std::vector<double> xs;
    std::vector<cplx> q;
    std::vector<double> residuals;  // per-x relative residual of the mu solve
    std::vector<int> iterations;
    // max over xs of |q - (-i m1_12)| where both are computed independently
    double max_route_disagreement = 0.0;
    // max over xs of |Q21 - conj(Q12)|: the reconstructed matrix should have
    // the off-diagonal conjugate structure; its diagonal is zero by
    // construction of ad(sigma).
    double max_structure_defect = 0.0;
};

// Reconstruct q(x, t) from the reflection coefficient: for each x build the
// jump data, solve (1 - C_w) mu = I, and integrate
//   m1 = -(1/2*pi*i) int mu (w^+ + w^-) dz,   Q = (ad sigma / 2*pi) int ...,
// returning q = -i (m1)_12 with the Q route as a cross-check.
inline ReconstructionResult reconstruct_potential(const SampledFn& r,
                                                  const std::vector<double>& xs, double t,
                                                  double tol = 1e-10, int threads = 1) {
    r.check();
    if (xs.empty()) throw std::invalid_argument("reconstruct_potential: xs empty");
    const std::size_t nx = xs.size();
    ReconstructionResult out;
    out.t = t;
    out.xs = xs;
    out.q.resize(nx);
    out.residuals.resize(nx);
    out.iterations.resize(nx);
    std::vector<double> route(nx), structure(nx);

    const auto& g = r.grid;
    const std::size_t n = std::size_t(g.n);
    parallel_for(nx, threads, [&](std::size_t j) {
        const JumpData jd = build_jump(r, xs[j], t);
        const MuSolution sol = solve_mu(jd, tol);
        cplx i12{}, i21{};
        for (std::size_t k = 0; k < n; ++k) {
            // mu (w^+ + w^-): (1,2) = mu11 R, (2,1) = -mu22 conj R
            i12 += sol.mu.values[k].a11 * jd.R[k];
            i21 += -sol.mu.values[k].a22 * std::conj(jd.R[k]);
        }
        i12 *= g.step;
        i21 *= g.step;
        const cplx m1_12 = -i12 / cplx(0.0, 2.0 * M_PI);
        const cplx q_residue = cplx(0.0, -1.0) * m1_12;
        const cplx q12 = i12 / (2.0 * M_PI);   // (ad sigma / 2 pi) (1,2) entry
        const cplx q21 = -i21 / (2.0 * M_PI);  // (ad sigma / 2 pi) (2,1) entry
        out.q[j] = q_residue;
        out.residuals[j] = sol.residual;
        out.iterations[j] = sol.iterations;
        route[j] = std::abs(q_residue - q12);
        structure[j] = std::abs(q21 - std::conj(q12));
    });

    for (std::size_t j = 0; j < nx; ++j) {
        out.max_route_disagreement = std::max(out.max_route_disagreement, route[j]);
        out.max_structure_defect = std::max(out.max_structure_defect, structure[j]);
    }
    if (out.max_route_disagreement > 1e-12)
        throw std::runtime_error("reconstruct_potential: residue/matrix routes disagree");
    return out;
}

// First-order (Born) reconstruction: q(x) ~ (1/2 pi) int r(z) e^{izx} dz.
inline cplx born_reconstruction(const SampledFn& r, double x) {
    cplx acc{};
    for (std::int64_t k = 0; k < r.grid.n; ++k) {
        const double z = r.grid.point(k);
        acc += r.values[std::size_t(k)] * std::polar(1.0, z * x);
    }
    return acc * (r.grid.step / (2.0 * M_PI));
}

}  // namespace nlsist
