// Command-line front end: counting, L-polynomial computation, sparse
// reconstruction, trace extension, period detection, supersingularity
// verification, cyclotomic checks, and the naive vs period-aware benchmark.
// JSON in, JSON out. Exit codes: 0 success, 1 mathematical inconsistency,
// 2 input/format error.

#include "sszeta/curve.hpp"
#include "sszeta/cyclo_suite.hpp"
#include "sszeta/driver.hpp"
#include "sszeta/extension.hpp"
#include "sszeta/json_io.hpp"
#include "sszeta/lpoly.hpp"
#include "sszeta/reconstruct.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace sszeta;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
}

Json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw input_error(what + ": " + e.what());
    }
}

void emit(const Json& value, const std::optional<std::string>& out_file = std::nullopt) {
    std::cout << value.dump(2) << "\n";
    if (out_file) {
        std::ofstream out(*out_file);
        if (!out) throw input_error("cannot write file: " + *out_file);
        out << value.dump(2) << "\n";
    }
}

Json report_to_json(const CheckReport& report) {
    return Json{{"checked", report.checked}, {"failures", report.failures}};
}

int run(int argc, char** argv) {
    CLI::App app{"exact L-polynomials of supersingular curves"};
    app.require_subcommand(1);

    std::string curve_file, lpoly_file, mode_str = "naive", coeffs_arg, traces_arg, cyclo_cmd;
    std::optional<std::string> out_file;
    std::uint64_t p = 0;
    unsigned r = 1, g = 1, n_arg = 0, N_arg = 0, period_arg = 0, bound_arg = 0, max_n = 48;

    auto* count = app.add_subcommand("count", "brute-force point counts and trace numbers");
    count->add_option("--curve", curve_file, "curve JSON file")->required();
    count->add_option("--n", n_arg, "single extension degree");
    count->add_option("--N", N_arg, "all extension degrees 1..N");

    auto* lpoly = app.add_subcommand("lpoly", "compute the L-polynomial of a curve");
    lpoly->add_option("--curve", curve_file, "curve JSON file")->required();
    lpoly->add_option("--mode", mode_str, "naive | period_aware")
        ->check(CLI::IsMember({"naive", "period_aware"}));
    lpoly->add_option("--period", period_arg, "period (or exponent multiple)");
    lpoly->add_option("--out", out_file, "also write the result to a file");

    auto* rec = app.add_subcommand("reconstruct", "rebuild from divisor-indexed coefficients");
    rec->add_option("--p", p)->required();
    rec->add_option("--r", r)->required();
    rec->add_option("--g", g)->required();
    rec->add_option("--period", period_arg)->required();
    rec->add_option("--coeffs", coeffs_arg, "JSON object {\"1\": \"0\", ...}")->required();
    rec->add_option("--out", out_file, "also write the result to a file");

    auto* ext = app.add_subcommand("extend", "extend trace numbers from the divisors of the period");
    ext->add_option("--p", p)->required();
    ext->add_option("--r", r)->required();
    ext->add_option("--period", period_arg)->required();
    ext->add_option("--traces", traces_arg, "JSON object of traces at divisors of the period")
        ->required();
    ext->add_option("--n", n_arg, "target extension degree")->required();

    auto* per = app.add_subcommand("period", "detect the period of an L-polynomial");
    per->add_option("--lpoly", lpoly_file, "L-polynomial JSON file")->required();
    per->add_option("--bound", bound_arg, "search bound (default max(4g^2, 64))");

    auto* ver = app.add_subcommand("verify", "supersingularity valuation test");
    ver->add_option("--lpoly", lpoly_file, "L-polynomial JSON file")->required();

    auto* cyc = app.add_subcommand("cyclo", "cyclotomic verification checks");
    cyc->add_option("command", cyclo_cmd, "gauss-check | membership | split | suite")
        ->required()
        ->check(CLI::IsMember({"gauss-check", "membership", "split", "suite"}));
    cyc->add_option("--n", n_arg, "conductor");
    cyc->add_option("--p", p, "prime");
    cyc->add_option("--max-n", max_n, "suite: largest conductor (default 48)");

    auto* ben = app.add_subcommand("bench", "naive vs period-aware work comparison");
    ben->add_option("--curve", curve_file, "curve JSON file")->required();
    ben->add_option("--period", period_arg, "period (or exponent multiple)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << Json{{"kind", "input"}, {"error", e.what()}}.dump() << "\n";
        return 2;
    }

    if (count->parsed()) {
        const CurveSpec spec = curve_from_json(read_json_file(curve_file));
        if ((n_arg == 0) == (N_arg == 0))
            throw input_error("count: give exactly one of --n or --N");
        if (n_arg != 0) {
            Int pts = count_points(spec, n_arg);
            Int s = pts - ipow(spec.q(), n_arg) - 1;
            emit(Json{{"n", n_arg},
                      {"count", pts.str()},
                      {"trace", s.str()},
                      {"genus", genus(spec)},
                      {"q", int_to_json(spec.q())}});
        } else {
            TraceSequence seq = trace_sequence(spec, N_arg);
            Json counts = Json::object(), traces = Json::object();
            for (const auto& [n, s] : seq.values) {
                counts[std::to_string(n)] = (s + ipow(spec.q(), n) + 1).str();
                traces[std::to_string(n)] = s.str();
            }
            emit(Json{{"q", int_to_json(spec.q())},
                      {"genus", genus(spec)},
                      {"counts", counts},
                      {"traces", traces}});
        }
        return 0;
    }

    if (lpoly->parsed()) {
        const CurveSpec spec = curve_from_json(read_json_file(curve_file));
        const LpolyMode mode =
            mode_str == "naive" ? LpolyMode::naive : LpolyMode::period_aware;
        std::optional<unsigned> period;
        if (period_arg != 0) period = period_arg;
        LpolyRun run = compute_lpoly(spec, mode, period);
        emit(Json{{"lpoly", to_json(run.lpoly)}, {"work", to_json(run.work)}});
        if (out_file) {  // the file gets the bare polynomial document
            std::ofstream out(*out_file);
            if (!out) throw input_error("cannot write file: " + *out_file);
            out << to_json(run.lpoly).dump(2) << "\n";
        }
        return 0;
    }

    if (rec->parsed()) {
        auto known = index_map_from_json(parse_json_arg(coeffs_arg, "--coeffs"), "coeffs");
        LPolynomial L = reconstruct(p, r, g, period_arg, known);
        emit(to_json(L), out_file);
        return 0;
    }

    if (ext->parsed()) {
        auto traces = index_map_from_json(parse_json_arg(traces_arg, "--traces"), "traces");
        TraceSequence seq = extend_sequence(traces, period_arg, p, r, n_arg);
        emit(Json{{"n", n_arg}, {"trace", seq.at(n_arg).str()}});
        return 0;
    }

    if (per->parsed()) {
        LPolynomial L = lpoly_from_json(read_json_file(lpoly_file));
        PeriodInfo info =
            bound_arg != 0 ? detect_period(L, bound_arg) : detect_period(L);
        emit(Json{{"period", info.s}, {"minimal_at", info.minimal_at}});
        return 0;
    }

    if (ver->parsed()) {
        LPolynomial L = lpoly_from_json(read_json_file(lpoly_file));
        SupersingularReport report = is_supersingular(L);
        Json failures = Json::array();
        for (const auto& f : report.failures)
            failures.push_back(
                Json{{"i", f.i}, {"ord_p", f.ord}, {"required_twice_ord", f.twice_min}});
        emit(Json{{"pass", report.pass}, {"failures", failures}});
        return report.pass ? 0 : 1;
    }

    if (cyc->parsed()) {
        CheckReport report;
        if (cyclo_cmd == "gauss-check") {
            if (p == 0) throw input_error("cyclo gauss-check: --p is required");
            report = gauss_check({p});
        } else if (cyclo_cmd == "membership") {
            if (p == 0 || n_arg == 0) throw input_error("cyclo membership: --n and --p required");
            report = membership_check(n_arg, p);
        } else if (cyclo_cmd == "split") {
            if (p == 0 || n_arg == 0) throw input_error("cyclo split: --n and --p required");
            report = split_check(n_arg, p);
        } else {
            report = cyclo_suite(max_n, {2, 3, 5, 7, 13});
        }
        emit(report_to_json(report));
        return report.pass() ? 0 : 1;
    }

    if (ben->parsed()) {
        const CurveSpec spec = curve_from_json(read_json_file(curve_file));
        BenchResult res = bench(spec, period_arg);
        emit(to_json(res));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    using nlohmann::json;
    try {
        return run(argc, argv);
    } catch (const sszeta::input_error& e) {
        std::cerr << json{{"kind", "input"}, {"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const sszeta::math_error& e) {
        std::cerr << json{{"kind", "math"}, {"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"kind", "math"}, {"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
