#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlsist {

// Ordinary least-squares slope of log(err) against log(t).
inline double fit_slope(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 3) throw std::invalid_argument("fit_slope: fewer than 3 rows");
    double prev_t = 0.0;
    for (const auto& [t, err] : rows) {
        if (!(err > 0.0)) throw std::invalid_argument("fit_slope: nonpositive error");
        if (!(t > prev_t)) throw std::invalid_argument("fit_slope: t not increasing");
        prev_t = t;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(rows.size());
    for (const auto& [t, err] : rows) {
        const double x = std::log(t), y = std::log(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace nlsist
