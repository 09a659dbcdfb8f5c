// Command-line front end: direct scattering, inverse reconstruction, explicit
// long-time asymptotics, split-step oracle, verification suites, decay fits.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input or a
// computation whose preconditions fail. All file output is buffered in memory
// first, so exit 2 never leaves a partially written file.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlsist/asymptotics.hpp"
#include "nlsist/compare.hpp"
#include "nlsist/io.hpp"
#include "nlsist/jump.hpp"
#include "nlsist/reconstruct.hpp"
#include "nlsist/splitstep.hpp"
#include "nlsist/threads.hpp"
#include "nlsist/verify.hpp"

namespace {

struct Opts {
    std::string input, output, suite;
    double t = 0.0;
    double x_min = -40.0, x_max = 40.0;
    std::int64_t nx = 4096;
    double z_half_width = 40.0;
    std::int64_t nz = 4096;
    double tol = 1e-10;
    double dt = 1e-3;
    int threads = 0;
    std::uint64_t seed = 1;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

nlsist::UniformGrid x_linspace(const Opts& o) {
    if (o.nx < 16) throw nlsist::io::IoError("--nx must be at least 16");
    if (!(o.x_max > o.x_min)) throw nlsist::io::IoError("--x-max must exceed --x-min");
    return {o.x_min, (o.x_max - o.x_min) / double(o.nx - 1), o.nx};
}

nlsist::UniformGrid z_grid(const Opts& o) {
    if (o.nz < 16) throw nlsist::io::IoError("--nz must be at least 16");
    if (!(o.z_half_width > 0.0)) throw nlsist::io::IoError("--z-half-width must be positive");
    return nlsist::UniformGrid::symmetric(o.z_half_width, o.nz);
}

int run_scatter(const Opts& o) {
    const nlsist::SampledFn q0 = nlsist::io::fn_from_json(nlsist::io::read_json_file(o.input),
                                                          "potential");
    const nlsist::ScatteringData sd =
        nlsist::scattering_coefficients(q0, z_grid(o), nlsist::resolve_threads(o.threads));
    nlsist::io::write_json_file(o.output, nlsist::io::scattering_to_json(sd));
    return 0;
}

int run_invert(const Opts& o) {
    const nlsist::SampledFn r =
        nlsist::io::reflection_from_json(nlsist::io::read_json_file(o.input));
    const nlsist::UniformGrid xg = x_linspace(o);
    std::vector<double> xs(static_cast<std::size_t>(xg.n));
    for (std::int64_t k = 0; k < xg.n; ++k) xs[std::size_t(k)] = xg.point(k);
    const nlsist::ReconstructionResult res = nlsist::reconstruct_potential(
        r, xs, o.t, o.tol, nlsist::resolve_threads(o.threads));
    if (ends_with(o.output, ".csv"))
        nlsist::io::write_text_file(o.output, nlsist::io::reconstruction_csv(res));
    else
        nlsist::io::write_json_file(o.output, nlsist::io::reconstruction_to_json(res, xg));
    return 0;
}

int run_evolve(const Opts& o) {
    const nlsist::SampledFn r =
        nlsist::io::reflection_from_json(nlsist::io::read_json_file(o.input));
    nlsist::io::write_json_file(o.output,
                                nlsist::io::fn_to_json(nlsist::evolve_reflection(r, o.t)));
    return 0;
}

int run_asym(const Opts& o) {
    const nlsist::SampledFn r =
        nlsist::io::reflection_from_json(nlsist::io::read_json_file(o.input));
    if (!(o.t > 0.0)) throw nlsist::io::IoError("--t must be positive for asymptotics");
    const nlsist::UniformGrid xg = x_linspace(o);
    nlsist::SampledFn out(xg);
    for (std::int64_t k = 0; k < xg.n; ++k)
        out.values[std::size_t(k)] = nlsist::q_asymptotic(r, xg.point(k), o.t);
    nlsist::io::write_json_file(o.output, nlsist::io::fn_to_json(out));
    return 0;
}

int run_oracle(const Opts& o) {
    const nlsist::FieldState s0 =
        nlsist::io::field_from_json(nlsist::io::read_json_file(o.input), "initial state");
    if (!(o.dt > 0.0)) throw nlsist::io::IoError("--dt must be positive");
    const nlsist::FieldState s1 = nlsist::split_step_evolve(s0, o.t, {o.dt});
    nlsist::io::write_json_file(o.output, nlsist::io::field_to_json(s1));
    return 0;
}

int run_verify(const Opts& o) {
    const nlsist::VerifyReport rep =
        nlsist::run_verify_suite(o.suite, o.seed, nlsist::resolve_threads(o.threads));
    const std::string text = nlsist::verify_report_to_json(rep).dump(2) + "\n";
    std::cout << text;
    if (!o.output.empty()) nlsist::io::write_text_file(o.output, text);
    return rep.pass ? 0 : 1;
}

int run_decay_fit(const Opts& o) {
    const nlsist::SampledFn q0 = nlsist::io::fn_from_json(nlsist::io::read_json_file(o.input),
                                                          "potential");
    nlsist::CompareConfig cfg;
    cfg.threads = nlsist::resolve_threads(o.threads);
    const nlsist::DecayTable table =
        nlsist::compare_asymptotics(q0, {100.0, 200.0, 400.0, 800.0}, cfg);
    if (ends_with(o.output, ".json")) {
        nlsist::io::json rows = nlsist::io::json::array();
        for (const auto& row : table.rows)
            rows.push_back(nlsist::io::json{{"t", row.t}, {"sup_err", row.sup_err}});
        nlsist::io::write_json_file(
            o.output, nlsist::io::json{{"rows", rows},
                                       {"slope", table.slope},
                                       {"strictly_decreasing", table.strictly_decreasing}});
    } else {
        nlsist::io::write_text_file(o.output, nlsist::io::decay_csv(table));
    }
    std::cout << "fitted log-log slope: " << table.slope << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{"Inverse-scattering transform toolkit for the defocusing nonlinear "
                 "Schrodinger equation"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub, bool need_output = true) {
        sub->add_option("--input", o.input, "input JSON path")->required();
        auto* out = sub->add_option("--output", o.output, "output path");
        if (need_output) out->required();
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads,
                        "worker threads (0: NLS_THREADS env or hardware)");
    };

    auto* scatter = app.add_subcommand(
        "scatter", "potential -> scattering data (a, b, reflection coefficient)");
    add_io(scatter);
    scatter->add_option("--z-half-width", o.z_half_width, "spectral grid half-width");
    scatter->add_option("--nz", o.nz, "spectral grid size");
    add_threads(scatter);

    auto* invert = app.add_subcommand(
        "invert", "reflection coefficient -> potential at time t (JSON, or CSV by extension)");
    add_io(invert);
    invert->add_option("--t", o.t, "evaluation time");
    invert->add_option("--x-min", o.x_min, "first evaluation point");
    invert->add_option("--x-max", o.x_max, "last evaluation point");
    invert->add_option("--nx", o.nx, "number of evaluation points");
    invert->add_option("--tol", o.tol, "singular-equation solve tolerance");
    add_threads(invert);

    auto* evolve = app.add_subcommand(
        "evolve", "reflection coefficient -> its explicit time evolution r(z) exp(-i z^2 t)");
    add_io(evolve);
    evolve->add_option("--t", o.t, "evolution time")->required();

    auto* asym = app.add_subcommand(
        "asym", "reflection coefficient -> explicit long-time asymptotic field on an x-grid");
    add_io(asym);
    asym->add_option("--t", o.t, "evaluation time (positive)")->required();
    asym->add_option("--x-min", o.x_min, "first evaluation point");
    asym->add_option("--x-max", o.x_max, "last evaluation point");
    asym->add_option("--nx", o.nx, "number of evaluation points");

    auto* oracle = app.add_subcommand(
        "oracle", "initial field -> split-step integration of the defocusing equation to time t");
    add_io(oracle);
    oracle->add_option("--t", o.t, "target time")->required();
    oracle->add_option("--dt", o.dt, "time step");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", o.suite,
                       "one of roundtrip|conservation|operators|delta|decay")
        ->required();
    verify->add_option("--output", o.output, "also write the report JSON here");
    verify->add_option("--seed", o.seed, "seed for the sampled checks");
    add_threads(verify);

    auto* decay_fit = app.add_subcommand(
        "decay-fit", "potential -> oracle-vs-asymptotics error table and fitted slope");
    add_io(decay_fit);
    add_threads(decay_fit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*scatter) return run_scatter(o);
        if (*invert) return run_invert(o);
        if (*evolve) return run_evolve(o);
        if (*asym) return run_asym(o);
        if (*oracle) return run_oracle(o);
        if (*verify) return run_verify(o);
        if (*decay_fit) return run_decay_fit(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand guarantees a dispatch
}
