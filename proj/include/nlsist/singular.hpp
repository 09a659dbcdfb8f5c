#pragma once

#include <random>

#include "nlsist/cauchy.hpp"
#include "nlsist/gmres.hpp"
#include "nlsist/jump.hpp"

namespace nlsist {

namespace detail {

inline SampledFn fn_of(const UniformGrid& g, std::vector<cplx> v) { return {g, std::move(v)}; }

}  // namespace detail

// C_w h = C+(h w^-) + C-(h w^+). Only two products survive the sparsity of
// w^+/-: column 2 of the result is C+(h_i1 R), column 1 is -C-(h_i2 conj R).
inline SampledMatrixFn apply_Cw(const SampledMatrixFn& h, const JumpData& jd) {
    const auto& g = h.grid;
    if (!(g == jd.r.grid)) throw std::invalid_argument("apply_Cw: grid mismatch");
    const std::size_t n = std::size_t(g.n);
    std::vector<cplx> a(n), b(n), c(n), d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Mat2& m = h.values[k];
        a[k] = m.a11 * jd.R[k];
        b[k] = m.a21 * jd.R[k];
        c[k] = m.a12 * std::conj(jd.R[k]);
        d[k] = m.a22 * std::conj(jd.R[k]);
    }
    const auto col2_row1 = cauchy_boundary(detail::fn_of(g, std::move(a)), Side::plus);
    const auto col2_row2 = cauchy_boundary(detail::fn_of(g, std::move(b)), Side::plus);
    const auto col1_row1 = cauchy_boundary(detail::fn_of(g, std::move(c)), Side::minus);
    const auto col1_row2 = cauchy_boundary(detail::fn_of(g, std::move(d)), Side::minus);
    SampledMatrixFn out(g);
    for (std::size_t k = 0; k < n; ++k)
        out.values[k] = Mat2{-col1_row1.values[k], col2_row1.values[k],
                             -col1_row2.values[k], col2_row2.values[k]};
    return out;
}

// Adjoint of C_w in the Frobenius L2 pairing: g -> (C+ g)(w^-)^H + (C- g)(w^+)^H.
inline SampledMatrixFn apply_Cw_adjoint(const SampledMatrixFn& h, const JumpData& jd) {
    const auto& g = h.grid;
    const std::size_t n = std::size_t(g.n);
    std::vector<cplx> a(n), b(n), c(n), d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Mat2& m = h.values[k];
        a[k] = m.a12;
        b[k] = m.a22;
        c[k] = m.a11;
        d[k] = m.a21;
    }
    const auto p12 = cauchy_boundary(detail::fn_of(g, std::move(a)), Side::plus);
    const auto p22 = cauchy_boundary(detail::fn_of(g, std::move(b)), Side::plus);
    const auto m11 = cauchy_boundary(detail::fn_of(g, std::move(c)), Side::minus);
    const auto m21 = cauchy_boundary(detail::fn_of(g, std::move(d)), Side::minus);
    SampledMatrixFn out(g);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx Rb = std::conj(jd.R[k]);
        out.values[k] = Mat2{p12.values[k] * Rb, -m11.values[k] * jd.R[k],
                             p22.values[k] * Rb, -m21.values[k] * jd.R[k]};
    }
    return out;
}

// O(n^2) reference for apply_Cw: deleted-node principal-value trapezoid plus
// the half-residue diagonal. First-order accurate in the grid step; used as a
// slow cross-check of the spectral path, not as a production operator.
inline SampledMatrixFn apply_Cw_dense(const SampledMatrixFn& h, const JumpData& jd) {
    const auto& g = h.grid;
    const std::size_t n = std::size_t(g.n);
    auto cauchy_dense = [&](const std::vector<cplx>& f, int sign) {
        std::vector<cplx> out(n);
        for (std::size_t j = 0; j < n; ++j) {
            cplx pv{};
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) pv += f[k] / (g.point(std::int64_t(k)) - g.point(std::int64_t(j)));
            pv *= g.step / cplx(0.0, 2.0 * M_PI);
            out[j] = pv + double(sign) * 0.5 * f[j];
        }
        return out;
    };
    std::vector<cplx> a(n), b(n), c(n), d(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Mat2& m = h.values[k];
        a[k] = m.a11 * jd.R[k];
        b[k] = m.a21 * jd.R[k];
        c[k] = m.a12 * std::conj(jd.R[k]);
        d[k] = m.a22 * std::conj(jd.R[k]);
    }
    const auto col2_row1 = cauchy_dense(a, +1);
    const auto col2_row2 = cauchy_dense(b, +1);
    const auto col1_row1 = cauchy_dense(c, -1);
    const auto col1_row2 = cauchy_dense(d, -1);
    SampledMatrixFn out(g);
    for (std::size_t k = 0; k < n; ++k)
        out.values[k] = Mat2{-col1_row1[k], col2_row1[k], -col1_row2[k], col2_row2[k]};
    return out;
}

// Operator-norm estimate by power iteration on C_w^* C_w.
inline double operator_norm_estimate(const JumpData& jd, int iters = 40,
                                     std::uint64_t seed = 7) {
    const auto& g = jd.r.grid;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    SampledMatrixFn v(g);
    for (auto& m : v.values)
        m = Mat2{cplx{nd(rng), nd(rng)}, cplx{nd(rng), nd(rng)}, cplx{nd(rng), nd(rng)},
                 cplx{nd(rng), nd(rng)}};
    double lam = 0.0;
    for (int it = 0; it < iters; ++it) {
        double vn2 = 0.0;
        for (const auto& m : v.values) vn2 += m.frob_norm() * m.frob_norm();
        const auto Av = apply_Cw(v, jd);
        double av2 = 0.0;
        for (const auto& m : Av.values) av2 += m.frob_norm() * m.frob_norm();
        lam = av2 / vn2;
        v = apply_Cw_adjoint(Av, jd);
        double wn2 = 0.0;
        for (const auto& m : v.values) wn2 += m.frob_norm() * m.frob_norm();
        if (wn2 == 0.0) return 0.0;
        const double inv = 1.0 / std::sqrt(wn2);
        for (auto& m : v.values) m = inv * m;
    }
    return std::sqrt(lam);
}

struct MuSolution {
    SampledMatrixFn mu;
    double residual = 0.0;  // ||(1 - C_w) mu - I||_2 relative to ||I||_2
    int iterations = 0;
    std::vector<double> ratio_history;  // Neumann successive-term ratios
    bool has_boundary = false;
    SampledMatrixFn m_plus, m_minus;
};

namespace detail {

// Row-decoupled action: row i of C_w h depends only on row i of h, so the
// 2x2 system splits into two (u1, u2) pairs of scalar functions:
//   u1' = -C-(conj R u2),  u2' = C+(R u1).
struct RowOp {
    const JumpData& jd;
    const UniformGrid& g;

    void apply(const std::vector<cplx>& u, std::vector<cplx>& out) const {
        const std::size_t n = std::size_t(g.n);
        std::vector<cplx> p(n), q(n);
        for (std::size_t k = 0; k < n; ++k) {
            p[k] = std::conj(jd.R[k]) * u[n + k];
            q[k] = jd.R[k] * u[k];
        }
        const auto cm = cauchy_boundary(fn_of(g, std::move(p)), Side::minus);
        const auto cp = cauchy_boundary(fn_of(g, std::move(q)), Side::plus);
        out.resize(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = -cm.values[k];
            out[n + k] = cp.values[k];
        }
    }
};

inline double vec_norm(const std::vector<cplx>& v, double step) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s * step);
}

}  // namespace detail

// Iteration choice for solve_mu: the automatic rule takes the Neumann series
// while rho <= 0.7 (the contraction bound makes it geometric) and restarted
// GMRES above; either can be forced.
enum class MuMethod { automatic, neumann, gmres_only };

// Solve (1 - C_w) mu = I. Both rows are solved; the recorded residual is the
// max over rows.
inline MuSolution solve_mu(const JumpData& jd, double tol = 1e-10,
                           bool want_boundary = false, int max_iters = 5000,
                           MuMethod method = MuMethod::automatic) {
    const auto& g = jd.r.grid;
    const std::size_t n = std::size_t(g.n);
    double rho = 0.0;
    for (const auto& v : jd.r.values) rho = std::max(rho, std::abs(v));
    if (rho >= 1.0) throw std::invalid_argument("solve_mu: rho >= 1");

    detail::RowOp op{jd, g};
    MuSolution sol;
    sol.mu = SampledMatrixFn(g);

    const bool use_neumann =
        method == MuMethod::neumann || (method == MuMethod::automatic && rho <= 0.7);
    std::vector<std::vector<cplx>> rows(2);
    for (int row = 0; row < 2; ++row) {
        std::vector<cplx> rhs(2 * n, cplx{});
        for (std::size_t k = 0; k < n; ++k) rhs[(row == 0 ? 0 : n) + k] = 1.0;
        // rhs norm: ||I row|| = sqrt(n*step) per scalar component
        const double rhs_norm = detail::vec_norm(rhs, g.step);

        std::vector<cplx> u;
        if (use_neumann) {
            // mu = sum_k C_w^k I: accumulate terms until the next term is small
            u = rhs;
            std::vector<cplx> term = rhs, next;
            double prev = 0.0;
            int it = 0;
            for (; it < max_iters; ++it) {
                op.apply(term, next);
                const double tn = detail::vec_norm(next, g.step);
                if (prev > 0.0 && row == 0) sol.ratio_history.push_back(tn / prev);
                prev = tn;
                for (std::size_t k = 0; k < 2 * n; ++k) u[k] += next[k];
                term.swap(next);
                if (tn <= tol * rhs_norm * (1.0 - rho)) break;
            }
            sol.iterations = std::max(sol.iterations, it + 1);
        } else {
            auto opfun = [&](const std::vector<cplx>& x, std::vector<cplx>& y) {
                op.apply(x, y);
                for (std::size_t k = 0; k < 2 * n; ++k) y[k] = x[k] - y[k];
            };
            auto res = gmres(opfun, rhs, tol, 60, max_iters);
            if (!res.converged) throw std::runtime_error("solve_mu: iteration budget exhausted");
            u = std::move(res.x);
            sol.iterations = std::max(sol.iterations, res.iterations);
        }
        rows[std::size_t(row)] = std::move(u);
    }

    for (std::size_t k = 0; k < n; ++k)
        sol.mu.values[k] = Mat2{rows[0][k], rows[0][n + k], rows[1][k], rows[1][n + k]};

    // final residual, max over rows
    for (int row = 0; row < 2; ++row) {
        std::vector<cplx> Ku;
        op.apply(rows[std::size_t(row)], Ku);
        std::vector<cplx> rhs(2 * n, cplx{});
        for (std::size_t k = 0; k < n; ++k) rhs[(row == 0 ? 0 : n) + k] = 1.0;
        double s = 0.0;
        for (std::size_t k = 0; k < 2 * n; ++k)
            s += std::norm(rows[std::size_t(row)][k] - Ku[k] - rhs[k]);
        sol.residual = std::max(
            sol.residual, std::sqrt(s * g.step) / detail::vec_norm(rhs, g.step));
    }

    if (want_boundary) {
        // m_pm = I + C^pm(mu (w^+ + w^-)): columns as in apply_Cw with both signs
        std::vector<cplx> c1r1(n), c1r2(n), c2r1(n), c2r2(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Mat2& m = sol.mu.values[k];
            c2r1[k] = m.a11 * jd.R[k];
            c2r2[k] = m.a21 * jd.R[k];
            c1r1[k] = -m.a12 * std::conj(jd.R[k]);
            c1r2[k] = -m.a22 * std::conj(jd.R[k]);
        }
        auto assemble = [&](Side side) {
            const auto col1_r1 = cauchy_boundary(detail::fn_of(g, c1r1), side);
            const auto col1_r2 = cauchy_boundary(detail::fn_of(g, c1r2), side);
            const auto col2_r1 = cauchy_boundary(detail::fn_of(g, c2r1), side);
            const auto col2_r2 = cauchy_boundary(detail::fn_of(g, c2r2), side);
            SampledMatrixFn m(g);
            for (std::size_t k = 0; k < n; ++k)
                m.values[k] = Mat2::identity() +
                              Mat2{col1_r1.values[k], col2_r1.values[k], col1_r2.values[k],
                                   col2_r2.values[k]};
            return m;
        };
        sol.m_plus = assemble(Side::plus);
        sol.m_minus = assemble(Side::minus);
        sol.has_boundary = true;
    }
    return sol;
}

}  // namespace nlsist
