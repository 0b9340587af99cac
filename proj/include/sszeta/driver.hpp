#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/curve.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/extension.hpp"
#include "sszeta/json_io.hpp"
#include "sszeta/lpoly.hpp"
#include "sszeta/reconstruct.hpp"

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

namespace sszeta {

/// Deterministic work metric for the point-counting pipeline: one visit per
/// enumerated field element, wall time carried along for reference only.
struct WorkCounter {
    std::vector<std::pair<unsigned, Int>> fields_enumerated;  // (n, q^n)
    Int total_element_visits = 0;
    std::int64_t wall_time_ms = 0;

    void record(unsigned n, const Int& size) {
        fields_enumerated.emplace_back(n, size);
        total_element_visits += size;
    }
};

inline Json to_json(const WorkCounter& w) {
    Json fields = Json::array();
    for (const auto& [n, size] : w.fields_enumerated)
        fields.push_back(Json{{"n", n}, {"size", size.str()}});
    return Json{{"fields_enumerated", fields},
                {"total_element_visits", w.total_element_visits.str()},
                {"wall_time_ms", w.wall_time_ms}};
}

enum class LpolyMode { naive, period_aware };

struct LpolyRun {
    LPolynomial lpoly;
    WorkCounter work;
};

/// naive: count n = 1..g and run the Newton recursion.
/// period_aware: count only at the divisor indices, extend the traces by the
/// divisor-gcd extension rule, and rebuild through the sparse reconstruction.
inline LpolyRun compute_lpoly(const CurveSpec& spec, LpolyMode mode,
                              std::optional<unsigned> period = std::nullopt) {
    const std::uint64_t g64 = genus(spec);
    if (g64 < 1) throw input_error("lpoly: curve must have genus >= 1");
    const unsigned g = static_cast<unsigned>(g64);
    const Int q = spec.q();
    WorkCounter work;
    const auto started = std::chrono::steady_clock::now();

    LPolynomial result{};
    if (mode == LpolyMode::naive) {
        std::vector<Int> S;
        for (unsigned n = 1; n <= g; ++n) {
            S.push_back(trace_number(spec, n));
            work.record(n, ipow(q, n));
        }
        result = coeffs_from_traces(spec.p, spec.r, g, S);
    } else {
        if (!period) throw input_error("lpoly: period_aware mode needs a period");
        const unsigned s = *period;
        std::map<unsigned, Int> divisor_traces;
        for (unsigned d : required_indices(g, s)) {
            divisor_traces[d] = trace_number(spec, d);
            work.record(d, ipow(q, d));
        }
        TraceSequence extended = extend_sequence(divisor_traces, s, spec.p, spec.r, g);
        std::vector<Int> S;
        for (unsigned n = 1; n <= g; ++n) S.push_back(extended.at(n));
        LPolynomial full = coeffs_from_traces(spec.p, spec.r, g, S);
        std::map<unsigned, Int> known;
        for (unsigned j : required_indices(g, s)) known[j] = full.coeffs[j];
        result = reconstruct(spec.p, spec.r, g, s, known);
    }

    work.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return LpolyRun{std::move(result), std::move(work)};
}

struct BenchResult {
    LpolyRun naive;
    LpolyRun period_aware;
    double visit_ratio = 0.0;
};

/// Runs both modes, insists on identical polynomials, and reports the
/// element-visit ratio naive / period_aware.
inline BenchResult bench(const CurveSpec& spec, unsigned period) {
    BenchResult res;
    res.naive = compute_lpoly(spec, LpolyMode::naive);
    res.period_aware = compute_lpoly(spec, LpolyMode::period_aware, period);
    if (!(res.naive.lpoly == res.period_aware.lpoly))
        throw math_error("bench: naive and period_aware modes disagree");
    res.visit_ratio = res.naive.work.total_element_visits.convert_to<double>() /
                      res.period_aware.work.total_element_visits.convert_to<double>();
    return res;
}

inline Json to_json(const BenchResult& b) {
    return Json{{"lpoly", to_json(b.naive.lpoly)},
                {"naive", to_json(b.naive.work)},
                {"period_aware", to_json(b.period_aware.work)},
                {"visit_ratio", b.visit_ratio}};
}

}  // namespace sszeta
