#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "nlsist/asymptotics.hpp"
#include "nlsist/fit.hpp"

using namespace nlsist;

namespace {

// odd length puts a node exactly at z = 0, so sampled values at the
// stationary point are exact rather than interpolated
const UniformGrid kOdd = UniformGrid::symmetric(20.0, 65537);

SampledFn half_gaussian_r(const UniformGrid& g) {
    return SampledFn::sample(g, [](double z) { return 0.5 * std::exp(-z * z); });
}

}  // namespace

TEST_CASE("stationary point of the phase x z - t z^2") {
    REQUIRE(stationary_point(3.0, 1.0) == 1.5);
    REQUIRE(stationary_point(-8.0, 2.0) == -2.0);
    REQUIRE(stationary_point(0.0, 5.0) == 0.0);
    REQUIRE_THROWS_AS(stationary_point(1.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(stationary_point(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("modulation order from the reflection magnitude") {
    const SampledFn r = half_gaussian_r(kOdd);
    // -log(1 - 1/4) / 2pi at the node z0 = 0, frozen
    REQUIRE(std::abs(nu(r, 0.0) - 0.045786023870342) < 1e-12);
    REQUIRE(nu(r, 6.5) < 1e-10);

    SampledFn bad = r;
    bad.values[(kOdd.n - 1) / 2] = 1.0;
    REQUIRE_THROWS_AS(nu(bad, 0.0), std::invalid_argument);
}

TEST_CASE("amplitude argument decomposes into its three contributions") {
    const SampledFn r = half_gaussian_r(kOdd);
    const AsymptoticParams p = alpha(r, 0.0);

    REQUIRE(p.z0 == 0.0);
    REQUIRE(std::abs(p.nu - 0.045786023870342) < 1e-12);
    REQUIRE(std::abs(std::abs(p.alpha) - std::sqrt(p.nu / 2.0)) < 1e-14);

    // (1/pi) int_{-inf}^{z0} log(z0 - s) d phi(s): the integral before the
    // 1/pi factor is frozen from 30-digit quadrature
    REQUIRE(std::abs(p.arg_breakdown.integral_term * M_PI - 0.19730330506940403) < 1e-6);
    // pi/4 + arg Gamma(i nu), with arg Gamma(i nu) from the reference table
    REQUIRE(std::abs(p.arg_breakdown.gamma_term - (M_PI / 4.0 + arg_gamma_imag_axis(p.nu))) <
            1e-14);
    // r(z0) = 1/2 is real and positive
    REQUIRE(std::abs(p.arg_breakdown.r_term) < 1e-14);

    const double want_arg = p.arg_breakdown.integral_term + p.arg_breakdown.gamma_term +
                            p.arg_breakdown.r_term;
    REQUIRE(std::abs(std::arg(p.alpha) - std::remainder(want_arg, 2.0 * M_PI)) < 1e-12);
}

TEST_CASE("vanishing reflection gives a vanishing amplitude") {
    const UniformGrid g = UniformGrid::symmetric(20.0, 1024);
    const SampledFn r0{g, std::vector<cplx>(std::size_t(g.n), cplx{})};
    const AsymptoticParams p = alpha(r0, 0.3);
    REQUIRE(p.nu == 0.0);
    REQUIRE(p.alpha == cplx{});
    REQUIRE(q_asymptotic(r0, 1.0, 100.0) == cplx{});
}

TEST_CASE("asymptotic field carries the self-similar modulus") {
    const SampledFn r = half_gaussian_r(kOdd);
    for (double t : {50.0, 200.0}) {
        for (double x : {0.0, 3.0, -11.0}) {
            const cplx q = q_asymptotic(r, x, t);
            const double nu0 = nu(r, stationary_point(x, t));
            REQUIRE(std::abs(std::abs(q) - std::sqrt(nu0 / (2.0 * t))) < 1e-13);
        }
    }
}

TEST_CASE("amplitude requires decayed reflection data") {
    const UniformGrid g = UniformGrid::symmetric(10.0, 512);
    const SampledFn flat = SampledFn::sample(g, [](double) { return 0.5; });
    REQUIRE_THROWS_AS(alpha(flat, 0.0), std::invalid_argument);
}

TEST_CASE("log-log slope fitting on exact power laws") {
    REQUIRE(std::abs(fit_slope({{1.0, 1.0}, {10.0, 0.1}, {100.0, 0.01}}) + 1.0) < 1e-12);
    REQUIRE(std::abs(fit_slope({{1.0, 1.0}, {4.0, 0.5}, {16.0, 0.25}}) + 0.5) < 1e-12);
    REQUIRE_THROWS_AS(fit_slope({{1.0, 1.0}, {2.0, 0.5}}), std::invalid_argument);
    REQUIRE_THROWS_AS(fit_slope({{1.0, 1.0}, {2.0, 0.0}, {3.0, 0.1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(fit_slope({{2.0, 1.0}, {1.0, 0.5}, {3.0, 0.1}}), std::invalid_argument);
}
