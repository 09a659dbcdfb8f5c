#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "nlsist/io.hpp"

using namespace nlsist;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    const fs::path d = fs::temp_directory_path() / "nlsist_cli_tests";
    fs::create_directories(d);
    return d;
}

int run_cli(const std::string& args) {
    const std::string cmd = "\"" NLS_BIN "\" " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path write_gaussian_potential(const std::string& name) {
    const auto p = work_dir() / name;
    // n = 256 keeps the cubic harmonics (spectrum ~ e^{-xi^2/12}) below the
    // split-step tail guard; 64 points is enough for q0 itself but not |q|^2 q
    const SampledFn q0 = SampledFn::sample(UniformGrid::symmetric(8.0, 256),
                                           [](double x) { return 0.3 * std::exp(-x * x); });
    io::write_json_file(p.string(), io::fn_to_json(q0));
    return p;
}

}  // namespace

TEST_CASE("cli pipeline: scatter, invert, evolve agree through files") {
    const auto q_path = write_gaussian_potential("cli_q0.json");
    const auto scat_path = work_dir() / "cli_scat.json";
    REQUIRE(run_cli("scatter --input " + q_path.string() + " --output " + scat_path.string() +
                    " --z-half-width 8 --nz 64") == 0);
    const io::json scat = io::read_json_file(scat_path.string());
    const ScatteringData sd = io::scattering_from_json(scat);
    REQUIRE(sd.rho < 1.0);
    REQUIRE(sd.grid.n == 64);

    const auto q_out = work_dir() / "cli_qrec.json";
    REQUIRE(run_cli("invert --input " + scat_path.string() + " --output " + q_out.string() +
                    " --nx 16 --x-min -1 --x-max 1") == 0);
    const io::json rec = io::read_json_file(q_out.string());
    REQUIRE(rec["xs"].size() == 16);
    double peak = 0.0;
    for (std::size_t k = 0; k < 16; ++k)
        peak = std::max(peak, std::hypot(rec["re"][k].get<double>(), rec["im"][k].get<double>()));
    REQUIRE(peak > 0.2);
    REQUIRE(peak < 0.4);

    const auto csv_out = work_dir() / "cli_qrec.csv";
    REQUIRE(run_cli("invert --input " + scat_path.string() + " --output " + csv_out.string() +
                    " --nx 16 --x-min -1 --x-max 1") == 0);
    REQUIRE(slurp(csv_out).rfind("x,re(q),im(q)\n", 0) == 0);

    // zero-time evolution reproduces the reflection channel bit for bit
    const auto ev_out = work_dir() / "cli_ev.json";
    REQUIRE(run_cli("evolve --input " + scat_path.string() + " --output " + ev_out.string() +
                    " --t 0") == 0);
    const io::json ev = io::read_json_file(ev_out.string());
    REQUIRE(ev["re"] == scat["r"]["re"]);
    REQUIRE(ev["im"] == scat["r"]["im"]);
}

TEST_CASE("cli oracle advances the clock on a small field") {
    const auto q_path = write_gaussian_potential("cli_field.json");
    const auto out = work_dir() / "cli_field_out.json";
    REQUIRE(run_cli("oracle --input " + q_path.string() + " --output " + out.string() +
                    " --t 0.01 --dt 1e-3") == 0);
    const FieldState s = io::field_from_json(io::read_json_file(out.string()));
    REQUIRE(s.t == 0.01);
    REQUIRE(s.q.size() == 256);
}

TEST_CASE("cli verify reports are deterministic for a fixed seed") {
    const auto r1 = work_dir() / "cli_rep1.json";
    const auto r2 = work_dir() / "cli_rep2.json";
    REQUIRE(run_cli("verify operators --seed 5 --output " + r1.string() + " > /dev/null") == 0);
    REQUIRE(run_cli("verify operators --seed 5 --output " + r2.string() + " > /dev/null") == 0);
    const std::string text = slurp(r1);
    REQUIRE(text == slurp(r2));
    const io::json rep = io::json::parse(text);
    REQUIRE(rep["suite"] == "operators");
    REQUIRE(rep["pass"] == true);
    for (const auto& c : rep["checks"]) REQUIRE(c["pass"] == true);
}

TEST_CASE("cli rejects bad requests with exit code 2") {
    const auto q_path = write_gaussian_potential("cli_bad_q0.json");
    const auto out = work_dir() / "cli_bad_out.json";
    const std::string quiet = " 2> /dev/null";

    // unknown suite name
    REQUIRE(run_cli("verify nonsense" + quiet) == 2);
    // unknown flag
    REQUIRE(run_cli("scatter --input " + q_path.string() + " --output " + out.string() +
                    " --bogus 1" + quiet) == 2);
    // missing required --input
    REQUIRE(run_cli("scatter --output " + out.string() + quiet) == 2);
    // asymptotics demands a positive time
    REQUIRE(run_cli("asym --input " + q_path.string() + " --output " + out.string() + " --t 0" +
                    quiet) == 2);
    // undersized evaluation grid
    REQUIRE(run_cli("invert --input " + q_path.string() + " --output " + out.string() +
                    " --nx 8" + quiet) == 2);
    REQUIRE_FALSE(fs::exists(out));

    // malformed input leaves no partial output behind
    const auto broken = work_dir() / "cli_broken.json";
    std::ofstream(broken) << "{ not json";
    REQUIRE(run_cli("scatter --input " + broken.string() + " --output " + out.string() + quiet) ==
            2);
    REQUIRE_FALSE(fs::exists(out));

    // help is not an error
    REQUIRE(run_cli("--help > /dev/null") == 0);
}
