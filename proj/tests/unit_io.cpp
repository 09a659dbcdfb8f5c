#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "nlsist/io.hpp"
#include "nlsist/rng.hpp"

using namespace nlsist;

namespace {

SampledFn noisy_fn(std::uint64_t seed) {
    return random_band_limited(UniformGrid::symmetric(5.0, 32), seed);
}

std::filesystem::path tmp(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("sampled function survives a json round trip exactly") {
    const SampledFn f = noisy_fn(3);
    const SampledFn back = io::fn_from_json(io::fn_to_json(f));
    REQUIRE(back.grid.n == f.grid.n);
    REQUIRE(back.grid.min == f.grid.min);
    REQUIRE(back.grid.step == f.grid.step);
    for (std::size_t k = 0; k < f.values.size(); ++k) REQUIRE(back.values[k] == f.values[k]);

    // through actual text, shortest-round-trip float printing keeps bits
    const auto text = io::fn_to_json(f).dump();
    const SampledFn reparsed = io::fn_from_json(io::json::parse(text));
    for (std::size_t k = 0; k < f.values.size(); ++k)
        REQUIRE(reparsed.values[k] == f.values[k]);
}

TEST_CASE("strict schemas reject malformed objects") {
    io::json j = io::fn_to_json(noisy_fn(4));

    io::json extra = j;
    extra["surprise"] = 1;
    REQUIRE_THROWS_AS(io::fn_from_json(extra), io::IoError);

    io::json missing = j;
    missing.erase("im");
    REQUIRE_THROWS_AS(io::fn_from_json(missing), io::IoError);

    io::json short_arr = j;
    short_arr["re"].erase(0);
    REQUIRE_THROWS_AS(io::fn_from_json(short_arr), io::IoError);

    io::json non_finite = j;
    non_finite["re"][0] = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(io::fn_from_json(non_finite), io::IoError);

    io::json bad_type = j;
    bad_type["re"][0] = "zero";
    REQUIRE_THROWS_AS(io::fn_from_json(bad_type), io::IoError);

    io::json tiny = j;
    tiny["grid"]["n"] = 8;
    REQUIRE_THROWS_AS(io::fn_from_json(tiny), io::IoError);

    io::json bad_step = j;
    bad_step["grid"]["step"] = -1.0;
    REQUIRE_THROWS_AS(io::fn_from_json(bad_step), io::IoError);
}

TEST_CASE("field state keeps its clock and accepts a bare function") {
    FieldState s{UniformGrid::symmetric(5.0, 32), noisy_fn(5).values, 2.25};
    const FieldState back = io::field_from_json(io::field_to_json(s));
    REQUIRE(back.t == 2.25);
    REQUIRE(back.q == s.q);

    const FieldState bare = io::field_from_json(io::fn_to_json(noisy_fn(5)));
    REQUIRE(bare.t == 0.0);
}

TEST_CASE("matrix channels round trip by name") {
    SampledMatrixFn m(UniformGrid::symmetric(5.0, 32));
    const SampledFn c = noisy_fn(6);
    for (std::size_t k = 0; k < m.values.size(); ++k)
        m.values[k] = Mat2{c.values[k], 2.0 * c.values[k], cplx{0.5, -0.5} * c.values[k],
                           c.values[k] - 1.0};
    const io::json j = io::matrix_to_json(m);
    REQUIRE(j.contains("11"));
    REQUIRE(j.contains("22"));
    const SampledMatrixFn back = io::matrix_from_json(j);
    for (std::size_t k = 0; k < m.values.size(); ++k) {
        REQUIRE(back.values[k].a11 == m.values[k].a11);
        REQUIRE(back.values[k].a12 == m.values[k].a12);
        REQUIRE(back.values[k].a21 == m.values[k].a21);
        REQUIRE(back.values[k].a22 == m.values[k].a22);
    }
}

TEST_CASE("scattering data round trips with its diagnostics") {
    ScatteringData sd;
    sd.grid = UniformGrid::symmetric(5.0, 32);
    const SampledFn c = noisy_fn(7);
    sd.a = c.values;
    sd.b = c.values;
    sd.r = c.values;
    sd.rho = 0.25;
    sd.lambda = 1.5;
    sd.eta = 2.5;
    const ScatteringData back = io::scattering_from_json(io::scattering_to_json(sd));
    REQUIRE(back.rho == 0.25);
    REQUIRE(back.lambda == 1.5);
    REQUIRE(back.eta == 2.5);
    REQUIRE(back.a == sd.a);
    REQUIRE(back.r == sd.r);

    // reflection input accepts both shapes
    const SampledFn r1 = io::reflection_from_json(io::scattering_to_json(sd));
    REQUIRE(r1.values == sd.r);
    const SampledFn r2 = io::reflection_from_json(io::fn_to_json({sd.grid, sd.r}));
    REQUIRE(r2.values == sd.r);
}

TEST_CASE("csv exports use the stated headers") {
    ReconstructionResult res;
    res.t = 0.0;
    res.xs = {1.5, 2.0};
    res.q = {cplx{2.0, -3.0}, cplx{0.5, 0.25}};
    REQUIRE(io::reconstruction_csv(res) == "x,re(q),im(q)\n1.5,2,-3\n2,0.5,0.25\n");

    DecayTable table;
    table.rows = {{100.0, 0.25}, {200.0, 0.125}};
    REQUIRE(io::decay_csv(table) == "t,sup_err\n100,0.25\n200,0.125\n");
}

TEST_CASE("file io reports failures and round trips content") {
    const auto good = tmp("nlsist_io_ok.json");
    io::write_json_file(good.string(), io::fn_to_json(noisy_fn(8)));
    const SampledFn back = io::fn_from_json(io::read_json_file(good.string()));
    REQUIRE(back.grid.n == 32);
    std::filesystem::remove(good);

    REQUIRE_THROWS_AS(io::read_json_file(tmp("nlsist_io_missing.json").string()), io::IoError);

    const auto broken = tmp("nlsist_io_broken.json");
    std::ofstream(broken) << "{ not json";
    bool threw = false;
    try {
        io::read_json_file(broken.string());
    } catch (const io::IoError& e) {
        threw = true;
        REQUIRE(std::string(e.what()).find("parse") != std::string::npos);
    }
    REQUIRE(threw);
    std::filesystem::remove(broken);
}
