#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlsist/compare.hpp"
#include "nlsist/jost.hpp"
#include "nlsist/reconstruct.hpp"
#include "nlsist/splitstep.hpp"

namespace nlsist::io {

using json = nlohmann::json;

// Raised for any input/output defect; the CLI maps it to exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

[[noreturn]] inline void fail(const std::string& msg) { throw IoError(msg); }

inline void require_keys(const json& j, const std::string& what,
                         std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) fail(what + ": expected a JSON object");
    for (const char* k : required)
        if (!j.contains(k)) fail(what + ": missing key \"" + k + "\"");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : required) known = known || item.key() == k;
        for (const char* k : optional) known = known || item.key() == k;
        if (!known) fail(what + ": unknown key \"" + item.key() + "\"");
    }
}

inline double finite_number(const json& j, const std::string& what) {
    if (!j.is_number()) fail(what + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(what + ": non-finite value");
    return v;
}

inline std::vector<double> finite_array(const json& j, const std::string& what,
                                        std::size_t expected) {
    if (!j.is_array()) fail(what + ": expected an array");
    if (j.size() != expected)
        fail(what + ": expected " + std::to_string(expected) + " entries, got " +
             std::to_string(j.size()));
    std::vector<double> out(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) out[k] = finite_number(j[k], what);
    return out;
}

}  // namespace detail

inline json grid_to_json(const UniformGrid& g) {
    return json{{"min", g.min}, {"step", g.step}, {"n", g.n}};
}

inline UniformGrid grid_from_json(const json& j, const std::string& what) {
    detail::require_keys(j, what, {"min", "step", "n"});
    UniformGrid g;
    g.min = detail::finite_number(j["min"], what + ".min");
    g.step = detail::finite_number(j["step"], what + ".step");
    if (!j["n"].is_number_integer()) detail::fail(what + ".n: expected an integer");
    g.n = j["n"].get<std::int64_t>();
    if (g.n < 16) detail::fail(what + ".n: grid size must be at least 16");
    if (g.step <= 0.0) detail::fail(what + ".step: must be positive");
    return g;
}

namespace detail {

inline void channel_to_json(json& j, const std::vector<cplx>& v) {
    std::vector<double> re(v.size()), im(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        re[k] = v[k].real();
        im[k] = v[k].imag();
    }
    j["re"] = re;
    j["im"] = im;
}

inline std::vector<cplx> channel_from_json(const json& j, const std::string& what,
                                           std::size_t expected) {
    require_keys(j, what, {"re", "im"});
    const auto re = finite_array(j["re"], what + ".re", expected);
    const auto im = finite_array(j["im"], what + ".im", expected);
    std::vector<cplx> out(expected);
    for (std::size_t k = 0; k < expected; ++k) out[k] = cplx(re[k], im[k]);
    return out;
}

}  // namespace detail

inline json fn_to_json(const SampledFn& f) {
    json j;
    j["grid"] = grid_to_json(f.grid);
    json ch;
    detail::channel_to_json(ch, f.values);
    j["re"] = ch["re"];
    j["im"] = ch["im"];
    return j;
}

inline SampledFn fn_from_json(const json& j, const std::string& what = "sampled function") {
    detail::require_keys(j, what, {"grid", "re", "im"});
    SampledFn f;
    f.grid = grid_from_json(j["grid"], what + ".grid");
    const auto n = std::size_t(f.grid.n);
    const auto re = detail::finite_array(j["re"], what + ".re", n);
    const auto im = detail::finite_array(j["im"], what + ".im", n);
    f.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) f.values[k] = cplx(re[k], im[k]);
    return f;
}

inline json field_to_json(const FieldState& s) {
    json j = fn_to_json({s.grid, s.q});
    j["t"] = s.t;
    return j;
}

// "t" is optional on read so a plain sampled function doubles as an initial state.
inline FieldState field_from_json(const json& j, const std::string& what = "field state") {
    detail::require_keys(j, what, {"grid", "re", "im"}, {"t"});
    FieldState s;
    SampledFn f;
    f.grid = grid_from_json(j["grid"], what + ".grid");
    const auto n = std::size_t(f.grid.n);
    const auto re = detail::finite_array(j["re"], what + ".re", n);
    const auto im = detail::finite_array(j["im"], what + ".im", n);
    s.grid = f.grid;
    s.q.resize(n);
    for (std::size_t k = 0; k < n; ++k) s.q[k] = cplx(re[k], im[k]);
    s.t = j.contains("t") ? detail::finite_number(j["t"], what + ".t") : 0.0;
    return s;
}

inline json matrix_to_json(const SampledMatrixFn& m) {
    json j;
    j["grid"] = grid_to_json(m.grid);
    const char* names[4] = {"11", "12", "21", "22"};
    std::vector<cplx> ch(static_cast<std::size_t>(m.grid.n));
    for (int c = 0; c < 4; ++c) {
        for (std::size_t k = 0; k < ch.size(); ++k) {
            const Mat2& v = m.values[k];
            ch[k] = c == 0 ? v.a11 : c == 1 ? v.a12 : c == 2 ? v.a21 : v.a22;
        }
        json cj;
        detail::channel_to_json(cj, ch);
        j[names[c]] = cj;
    }
    return j;
}

inline SampledMatrixFn matrix_from_json(const json& j,
                                        const std::string& what = "matrix function") {
    detail::require_keys(j, what, {"grid", "11", "12", "21", "22"});
    SampledMatrixFn m(grid_from_json(j["grid"], what + ".grid"));
    const char* names[4] = {"11", "12", "21", "22"};
    for (int c = 0; c < 4; ++c) {
        const auto ch =
            detail::channel_from_json(j[names[c]], what + "." + names[c], std::size_t(m.grid.n));
        for (std::size_t k = 0; k < ch.size(); ++k) {
            Mat2& v = m.values[k];
            (c == 0 ? v.a11 : c == 1 ? v.a12 : c == 2 ? v.a21 : v.a22) = ch[k];
        }
    }
    return m;
}

inline json scattering_to_json(const ScatteringData& sd) {
    json j;
    j["grid"] = grid_to_json(sd.grid);
    json a, b, r;
    detail::channel_to_json(a, sd.a);
    detail::channel_to_json(b, sd.b);
    detail::channel_to_json(r, sd.r);
    j["a"] = a;
    j["b"] = b;
    j["r"] = r;
    j["rho"] = sd.rho;
    j["lambda"] = sd.lambda;
    j["eta"] = sd.eta;
    return j;
}

inline ScatteringData scattering_from_json(const json& j,
                                           const std::string& what = "scattering data") {
    detail::require_keys(j, what, {"grid", "a", "b", "r", "rho", "lambda", "eta"});
    ScatteringData sd;
    sd.grid = grid_from_json(j["grid"], what + ".grid");
    const auto n = std::size_t(sd.grid.n);
    sd.a = detail::channel_from_json(j["a"], what + ".a", n);
    sd.b = detail::channel_from_json(j["b"], what + ".b", n);
    sd.r = detail::channel_from_json(j["r"], what + ".r", n);
    sd.rho = detail::finite_number(j["rho"], what + ".rho");
    sd.lambda = detail::finite_number(j["lambda"], what + ".lambda");
    sd.eta = detail::finite_number(j["eta"], what + ".eta");
    return sd;
}

// Reflection data for the inverse map: either full scattering output or a bare
// sampled function is accepted.
inline SampledFn reflection_from_json(const json& j) {
    if (j.is_object() && j.contains("r")) {
        ScatteringData sd = scattering_from_json(j);
        return {sd.grid, std::move(sd.r)};
    }
    return fn_from_json(j, "reflection coefficient");
}

inline json reconstruction_to_json(const ReconstructionResult& res, const UniformGrid& xgrid) {
    json j;
    j["grid"] = grid_to_json(xgrid);
    json ch;
    detail::channel_to_json(ch, res.q);
    j["re"] = ch["re"];
    j["im"] = ch["im"];
    j["t"] = res.t;
    j["xs"] = res.xs;
    return j;
}

namespace detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::string reconstruction_csv(const ReconstructionResult& res) {
    std::string out = "x,re(q),im(q)\n";
    for (std::size_t k = 0; k < res.xs.size(); ++k) {
        out += detail::num(res.xs[k]);
        out += ',';
        out += detail::num(res.q[k].real());
        out += ',';
        out += detail::num(res.q[k].imag());
        out += '\n';
    }
    return out;
}

inline std::string decay_csv(const DecayTable& table) {
    std::string out = "t,sup_err\n";
    for (const auto& row : table.rows) {
        out += detail::num(row.t);
        out += ',';
        out += detail::num(row.sup_err);
        out += '\n';
    }
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) detail::fail("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        detail::fail(path + ": " + e.what());
    }
    return j;
}

// All output is serialized to a string first so a failed run never leaves a
// partially written file behind.
inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) detail::fail("cannot open output file: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    out.flush();
    if (!out) detail::fail("write failed: " + path);
}

inline void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace nlsist::io
