#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/extension.hpp"
#include "sszeta/lpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sszeta {

/// The coefficient indices that must be supplied to reconstruct a genus-g
/// polynomial with exponent s: the j <= g dividing s.
inline std::vector<unsigned> required_indices(unsigned g, unsigned s) {
    if (g < 1 || s < 1) throw input_error("required_indices: g, s must be >= 1");
    std::vector<unsigned> out;
    for (unsigned j = 1; j <= g; ++j)
        if (s % j == 0) out.push_back(j);
    return out;
}

/// Rebuild the full L-polynomial from the divisor-indexed coefficients,
/// interleaving the Newton recursion with trace extension: for l | s take
/// c_l from the input and solve for S_l; otherwise extend S_{gcd(l,s)} and
/// solve for c_l. The result must pass the supersingularity valuation test.
inline LPolynomial reconstruct(std::uint64_t p, unsigned r, unsigned g, unsigned s,
                               const std::map<unsigned, Int>& known) {
    if (g < 1) throw input_error("reconstruct: g must be >= 1");
    if ((static_cast<std::uint64_t>(s) * r) % 2 != 0)
        throw input_error("reconstruct: s*r must be even (s = " + std::to_string(s) +
                          ", r = " + std::to_string(r) + ")");
    const auto required = required_indices(g, s);
    for (unsigned j : required)
        if (!known.count(j))
            throw input_error("reconstruct: missing coefficient c_" + std::to_string(j));
    for (const auto& [j, _] : known)
        if (j < 1 || j > g || s % j != 0)
            throw input_error("reconstruct: unexpected coefficient index " + std::to_string(j));

    std::vector<Int> c(2 * static_cast<std::size_t>(g) + 1, Int(0));
    std::vector<Int> S(static_cast<std::size_t>(g) + 1, Int(0));
    c[0] = 1;
    for (unsigned l = 1; l <= g; ++l) {
        if (s % l == 0) {
            c[l] = known.at(l);
            Int acc = Int(l) * c[l];
            for (unsigned j = 1; j < l; ++j) acc -= S[l - j] * c[j];
            S[l] = acc;
        } else {
            S[l] = extend_trace(S[std::gcd(l, s)], plan_reduction(l, s, p, r));
            Int num = 0;
            for (unsigned j = 0; j < l; ++j) num += S[l - j] * c[j];
            if (num % l != 0)
                throw math_error("reconstruct: " + std::to_string(l) + "*c_" +
                                 std::to_string(l) + " = " + num.str() +
                                 " is not divisible by " + std::to_string(l) +
                                 "; the claimed period/exponent " + std::to_string(s) +
                                 " is inconsistent with the inputs");
            c[l] = num / l;
        }
    }
    const Int q = ipow(Int(p), r);
    for (unsigned i = 0; i < g; ++i) c[2 * g - i] = ipow(q, g - i) * c[i];
    LPolynomial L = make_lpolynomial(p, r, g, std::move(c));
    auto ss = is_supersingular(L);
    if (!ss.pass) {
        const auto& f = ss.failures.front();
        throw math_error("reconstruct: result is not supersingular (ord_" +
                         std::to_string(p) + "(c_" + std::to_string(f.i) + ") = " +
                         std::to_string(f.ord) + ", needs 2*ord >= " +
                         std::to_string(f.twice_min) + ")");
    }
    return L;
}

struct AuditReport {
    bool success = true;
    std::optional<unsigned> mismatch_index;
    std::string message;
};

/// Re-derives the polynomial from its own divisor-indexed coefficients and
/// diffs the result; also checks that the claimed exponent is a multiple of
/// the detected period.
inline AuditReport reconstruction_audit(const LPolynomial& L, unsigned s) {
    AuditReport report;
    std::map<unsigned, Int> known;
    for (unsigned j : required_indices(L.g, s)) known[j] = L.coeffs[j];
    try {
        LPolynomial rebuilt = reconstruct(L.p, L.r, L.g, s, known);
        for (unsigned i = 0; i <= 2 * L.g; ++i) {
            if (rebuilt.coeffs[i] != L.coeffs[i]) {
                report.success = false;
                report.mismatch_index = i;
                report.message = "coefficient mismatch at index " + std::to_string(i) +
                                 ": rebuilt " + rebuilt.coeffs[i].str() + ", original " +
                                 L.coeffs[i].str();
                return report;
            }
        }
        PeriodInfo period = detect_period(L);
        if (s % period.s != 0) {
            report.success = false;
            report.message = "claimed exponent " + std::to_string(s) +
                             " is not a multiple of the period " + std::to_string(period.s);
            return report;
        }
    } catch (const std::exception& e) {
        report.success = false;
        report.message = e.what();
        return report;
    }
    report.message = "reconstruction from indices dividing " + std::to_string(s) +
                     " reproduces the polynomial";
    return report;
}

}  // namespace sszeta
