#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace nlsist {

namespace detail {

using cvec = std::vector<std::complex<double>>;

inline std::complex<double> dot(const cvec& a, const cvec& b) {
    std::complex<double> s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}
inline double nrm(const cvec& a) { return std::sqrt(std::abs(dot(a, a))); }
inline void axpy(std::complex<double> c, const cvec& x, cvec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

}  // namespace detail

struct GmresResult {
    std::vector<std::complex<double>> x;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Restarted GMRES with modified Gram-Schmidt and Givens rotations, for the
// complex L2 system (I - K)u = rhs given as op(u) = u - K u.
inline GmresResult gmres(const std::function<void(const detail::cvec&, detail::cvec&)>& op,
                         const detail::cvec& rhs, double tol, int restart = 60,
                         int max_iters = 2000) {
    using detail::axpy;
    using detail::cvec;
    using detail::dot;
    using detail::nrm;
    using C = std::complex<double>;

    GmresResult res;
    res.x.assign(rhs.size(), C{});
    const double bnorm = nrm(rhs);
    if (bnorm == 0.0) {
        res.converged = true;
        return res;
    }

    cvec r(rhs.size()), tmp(rhs.size());
    int total = 0;
    while (total < max_iters) {
        op(res.x, tmp);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = rhs[i] - tmp[i];
        double beta = nrm(r);
        res.residual = beta / bnorm;
        if (res.residual <= tol) {
            res.converged = true;
            return res;
        }

        const int m = restart;
        std::vector<cvec> V;
        V.reserve(std::size_t(m) + 1);
        V.push_back(r);
        for (auto& c : V[0]) c /= beta;
        std::vector<std::vector<C>> H(std::size_t(m) + 1, std::vector<C>(std::size_t(m), C{}));
        std::vector<C> cs(static_cast<std::size_t>(m));
        std::vector<C> sn(static_cast<std::size_t>(m));
        std::vector<C> g(static_cast<std::size_t>(m) + 1, C{});
        g[0] = beta;
        int k = 0;
        for (; k < m && total < max_iters; ++k, ++total) {
            op(V[std::size_t(k)], tmp);
            cvec w = tmp;
            for (int i = 0; i <= k; ++i) {
                H[std::size_t(i)][std::size_t(k)] = dot(V[std::size_t(i)], w);
                axpy(-H[std::size_t(i)][std::size_t(k)], V[std::size_t(i)], w);
            }
            const double hnext = nrm(w);
            H[std::size_t(k) + 1][std::size_t(k)] = hnext;
            if (hnext > 0.0) {
                for (auto& c : w) c /= hnext;
                V.push_back(std::move(w));
            }
            for (int i = 0; i < k; ++i) {
                const C t0 = H[std::size_t(i)][std::size_t(k)];
                const C t1 = H[std::size_t(i) + 1][std::size_t(k)];
                H[std::size_t(i)][std::size_t(k)] = std::conj(cs[std::size_t(i)]) * t0 +
                                                    std::conj(sn[std::size_t(i)]) * t1;
                H[std::size_t(i) + 1][std::size_t(k)] = -sn[std::size_t(i)] * t0 + cs[std::size_t(i)] * t1;
            }
            const C h0 = H[std::size_t(k)][std::size_t(k)];
            const double h1 = std::abs(H[std::size_t(k) + 1][std::size_t(k)]);
            const double denom = std::sqrt(std::norm(h0) + h1 * h1);
            cs[std::size_t(k)] = denom > 0.0 ? h0 / denom : C{1.0};
            sn[std::size_t(k)] = denom > 0.0 ? C{h1 / denom} : C{};
            H[std::size_t(k)][std::size_t(k)] =
                std::conj(cs[std::size_t(k)]) * h0 + std::conj(sn[std::size_t(k)]) * h1;
            H[std::size_t(k) + 1][std::size_t(k)] = C{};
            const C g0 = g[std::size_t(k)];
            g[std::size_t(k)] = std::conj(cs[std::size_t(k)]) * g0;
            g[std::size_t(k) + 1] = -sn[std::size_t(k)] * g0;
            res.residual = std::abs(g[std::size_t(k) + 1]) / bnorm;
            if (res.residual <= tol || hnext == 0.0) {
                ++k;
                break;
            }
        }
        // back-substitute y from the triangularized H and update x
        std::vector<C> y(std::size_t(k), C{});
        for (int i = k - 1; i >= 0; --i) {
            C s = g[std::size_t(i)];
            for (int j = i + 1; j < k; ++j) s -= H[std::size_t(i)][std::size_t(j)] * y[std::size_t(j)];
            y[std::size_t(i)] = s / H[std::size_t(i)][std::size_t(i)];
        }
        for (int i = 0; i < k; ++i) axpy(y[std::size_t(i)], V[std::size_t(i)], res.x);
        res.iterations = total;
        if (res.residual <= tol) {
            res.converged = true;
            return res;
        }
    }
    res.iterations = total;
    return res;
}

}  // namespace nlsist
