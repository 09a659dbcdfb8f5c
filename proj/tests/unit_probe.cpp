#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "nlsist/probe.hpp"

using namespace nlsist;

namespace {

SampledFn sampled(const UniformGrid& g, cplx (*f)(double)) {
    return SampledFn::sample(g, [&](double z) { return f(z); });
}

const UniformGrid kWide = UniformGrid::symmetric(16.0, 2048);

}  // namespace

TEST_CASE("probe reproduces the gaussian fresnel integral") {
    // with zero reflection the weight is 1, so the probe is
    // int e^{-z^2} e^{-i sign t z^2} dz = sqrt(pi / (1 + i sign t))
    const SampledFn f = sampled(kWide, [](double z) { return cplx(std::exp(-z * z)); });
    const SampledFn r0{kWide, std::vector<cplx>(std::size_t(kWide.n), cplx{})};
    const DeltaTable table = build_delta_table(r0, 0.0);
    for (int sign : {+1, -1}) {
        for (double t : {1.0, 10.0, 100.0}) {
            const cplx got = oscillatory_decay_probe(f, table, t, sign);
            const cplx want = std::sqrt(M_PI / cplx(1.0, sign * t));
            // floor set by linear interpolation of the sampled amplitude
            // (step^2 f''/8 ~ 6e-5 on this grid); measured max 4.5e-5
            REQUIRE(std::abs(got - want) < 1e-4);
        }
    }
}

TEST_CASE("probe panel edges are ordered and span the cutoff") {
    const auto edges = detail::probe_edges(100.0, 7.0);
    REQUIRE(edges.front() == 1e-9 * 7.0);
    REQUIRE(edges.back() == 7.0);
    for (std::size_t k = 1; k < edges.size(); ++k) REQUIRE(edges[k] > edges[k - 1]);
}

TEST_CASE("probe overload builds the weight table from the reflection") {
    const SampledFn f = sampled(kWide, [](double z) { return cplx(std::exp(-z * z)); });
    const UniformGrid zg = UniformGrid::symmetric(40.0, 4096);
    const SampledFn r =
        SampledFn::sample(zg, [](double z) { return 0.5 * std::exp(-z * z); });
    const cplx via_overload = oscillatory_decay_probe(f, r, 3.0, +1);
    const cplx via_table = oscillatory_decay_probe(f, build_delta_table(r, 0.0), 3.0, +1);
    REQUIRE(std::abs(via_overload - via_table) < 1e-13);
    // the unimodular weight cannot change the order of magnitude
    REQUIRE(std::abs(via_overload) < 2.0);
    REQUIRE(std::abs(via_overload) > 1e-3);
}

TEST_CASE("probe rejects undersized windows and bad parameters") {
    const SampledFn f = sampled(kWide, [](double z) { return cplx(std::exp(-z * z)); });
    const SampledFn r0{kWide, std::vector<cplx>(std::size_t(kWide.n), cplx{})};
    const DeltaTable table = build_delta_table(r0, 0.0);

    REQUIRE_THROWS_AS(oscillatory_decay_probe(f, table, 1.0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(oscillatory_decay_probe(f, table, 0.0, 1), std::invalid_argument);

    const UniformGrid narrow = UniformGrid::symmetric(4.0, 256);
    const SampledFn f_narrow =
        sampled(narrow, [](double z) { return cplx(std::exp(-z * z)); });
    REQUIRE_THROWS_AS(oscillatory_decay_probe(f_narrow, table, 1.0, 1), std::runtime_error);

    const SampledFn f_flat = sampled(kWide, [](double) { return cplx(1.0); });
    REQUIRE_THROWS_AS(oscillatory_decay_probe(f_flat, table, 1.0, 1), std::runtime_error);
}
