#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nlsist {

// Uniform grid on the line: points are midpoints of n cells of width `step`
// tiling [min - step/2, min + step*(n - 1/2)]. The symmetric constructor
// centers that tile on the origin, so symmetric(Z, n) partitions [-Z, Z].
struct UniformGrid {
    double min = 0.0;
    double step = 1.0;
    std::int64_t n = 0;

    UniformGrid() = default;
    UniformGrid(double min_, double step_, std::int64_t n_) : min(min_), step(step_), n(n_) {
        if (n < 2) throw std::invalid_argument("grid: n < 2");
        if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(min))
            throw std::invalid_argument("grid: bad min/step");
    }

    static UniformGrid centered(double step, std::int64_t n) {
        return {-step * double(n - 1) / 2.0, step, n};
    }
    static UniformGrid symmetric(double half_width, std::int64_t n) {
        return centered(2.0 * half_width / double(n), n);
    }

    double point(std::int64_t k) const { return min + step * double(k); }
    double left_edge() const { return min - step / 2.0; }
    double right_edge() const { return min + step * (double(n) - 0.5); }

    std::vector<double> points() const {
        std::vector<double> p(static_cast<std::size_t>(n));
        for (std::int64_t k = 0; k < n; ++k) p[std::size_t(k)] = point(k);
        return p;
    }

    // Frequency grid of the discrete transform: dxi = 2*pi/(n*step),
    // xi_min = -floor(n/2)*dxi, so xi_j = (j - floor(n/2))*dxi.
    UniformGrid dual() const {
        const double dxi = 2.0 * M_PI / (double(n) * step);
        return {-double(n / 2) * dxi, dxi, n};
    }

    bool operator==(const UniformGrid& o) const {
        return min == o.min && step == o.step && n == o.n;
    }
};

}  // namespace nlsist
