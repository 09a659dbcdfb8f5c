#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "nlsist/grid.hpp"
#include "nlsist/mat2.hpp"

namespace nlsist {

using cplx = std::complex<double>;

inline bool all_finite(const std::vector<cplx>& v) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

// Scalar function sampled on a uniform grid; entries must stay finite.
struct SampledFn {
    UniformGrid grid;
    std::vector<cplx> values;

    SampledFn() = default;
    SampledFn(UniformGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
        check();
    }
    explicit SampledFn(UniformGrid g) : grid(g), values(std::size_t(g.n), cplx{}) {}

    void check() const {
        if (std::int64_t(values.size()) != grid.n)
            throw std::invalid_argument("SampledFn: values.length != grid.n");
        if (!all_finite(values)) throw std::invalid_argument("SampledFn: non-finite entry");
    }

    template <class F>
    static SampledFn sample(UniformGrid g, F f) {
        SampledFn out(g);
        for (std::int64_t k = 0; k < g.n; ++k) out.values[std::size_t(k)] = f(g.point(k));
        out.check();
        return out;
    }

    // Linear interpolation; clamps to the nearest sample outside the grid.
    cplx at(double z) const {
        const double u = (z - grid.min) / grid.step;
        if (u <= 0.0) return values.front();
        if (u >= double(grid.n - 1)) return values.back();
        const auto k = std::int64_t(u);
        const double w = u - double(k);
        return values[std::size_t(k)] * (1.0 - w) + values[std::size_t(k) + 1] * w;
    }

    double norm_l2() const {  // continuum L2 via midpoint rule
        double s = 0.0;
        for (const auto& z : values) s += std::norm(z);
        return std::sqrt(s * grid.step);
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& z : values) m = std::max(m, std::abs(z));
        return m;
    }
    double endpoint_abs() const {
        return std::max(std::abs(values.front()), std::abs(values.back()));
    }
};

// 2x2 matrix function sampled on a uniform grid.
struct SampledMatrixFn {
    UniformGrid grid;
    std::vector<Mat2> values;

    SampledMatrixFn() = default;
    explicit SampledMatrixFn(UniformGrid g) : grid(g), values(std::size_t(g.n)) {}
    SampledMatrixFn(UniformGrid g, std::vector<Mat2> v) : grid(g), values(std::move(v)) {
        if (std::int64_t(values.size()) != grid.n)
            throw std::invalid_argument("SampledMatrixFn: values.length != grid.n");
    }
};

}  // namespace nlsist
