#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/field.hpp"
#include "sszeta/traces.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace sszeta {

/// L-polynomial of a curve of genus g over F_q, q = p^r: the 2g+1 exact
/// integer coefficients c_0..c_2g with c_0 = 1 and the functional equation
/// c_{2g-i} = q^{g-i} c_i. Both invariants are checked at construction.
struct LPolynomial {
    std::uint64_t p = 0;
    unsigned r = 1;
    unsigned g = 1;
    std::vector<Int> coeffs;

    Int q() const { return ipow(Int(p), r); }

    bool operator==(const LPolynomial& o) const {
        return p == o.p && r == o.r && g == o.g && coeffs == o.coeffs;
    }
};

inline LPolynomial make_lpolynomial(std::uint64_t p, unsigned r, unsigned g,
                                    std::vector<Int> coeffs) {
    if (!is_prime_u64(p)) throw input_error("lpolynomial: p is not prime");
    if (r < 1) throw input_error("lpolynomial: r must be >= 1");
    if (g < 1) throw input_error("lpolynomial: genus must be >= 1");
    if (coeffs.size() != 2 * static_cast<std::size_t>(g) + 1)
        throw input_error("lpolynomial: expected 2g+1 coefficients");
    if (coeffs[0] != 1) throw input_error("lpolynomial: c_0 must be 1");
    const Int q = ipow(Int(p), r);
    for (unsigned i = 0; i <= g; ++i)
        if (coeffs[2 * g - i] != ipow(q, g - i) * coeffs[i])
            throw math_error("lpolynomial: functional equation fails at i = " +
                             std::to_string(i));
    return LPolynomial{p, r, g, std::move(coeffs)};
}

/// Newton recursion i c_i = sum_{j<i} S_{i-j} c_j for i <= g, functional
/// equation for the upper half. Fails if some i c_i is not divisible by i,
/// which means S is not realizable at this genus/field.
inline LPolynomial coeffs_from_traces(std::uint64_t p, unsigned r, unsigned g,
                                      const std::vector<Int>& S) {
    if (S.size() < g) throw input_error("coeffs_from_traces: need S_1..S_g");
    std::vector<Int> c(2 * static_cast<std::size_t>(g) + 1, Int(0));
    c[0] = 1;
    for (unsigned i = 1; i <= g; ++i) {
        Int num = 0;
        for (unsigned j = 0; j < i; ++j) num += S[i - j - 1] * c[j];
        if (num % i != 0)
            throw math_error("coeffs_from_traces: " + std::to_string(i) +
                             "*c_" + std::to_string(i) + " = " + num.str() +
                             " is not divisible by " + std::to_string(i));
        c[i] = num / i;
    }
    const Int q = ipow(Int(p), r);
    for (unsigned i = 0; i < g; ++i) c[2 * g - i] = ipow(q, g - i) * c[i];
    return make_lpolynomial(p, r, g, std::move(c));
}

/// S_1..S_N from the coefficients: power sums P_n = -S_n of the reciprocal
/// roots satisfy P_n + sum_{j=1}^{min(n-1,2g)} c_j P_{n-j} + [n<=2g] n c_n = 0.
inline TraceSequence traces_from_coeffs(const LPolynomial& L, unsigned N) {
    // No Weil check here: the recursion is pure algebra and also serves
    // arbitrary integer polynomials, whose roots need not have modulus
    // sqrt(q).
    TraceSequence seq{L.q(), std::nullopt, {}};
    std::vector<Int> P(static_cast<std::size_t>(N) + 1, Int(0));
    const unsigned deg = 2 * L.g;
    for (unsigned n = 1; n <= N; ++n) {
        Int acc = 0;
        const unsigned m = std::min(n - 1, deg);
        for (unsigned j = 1; j <= m; ++j) acc += L.coeffs[j] * P[n - j];
        if (n <= deg) acc += Int(n) * L.coeffs[n];
        P[n] = -acc;
        seq.set(n, -P[n]);
    }
    return seq;
}

struct SupersingularReport {
    struct Failure {
        unsigned i;
        std::uint64_t ord;         // ord_p(c_i)
        std::uint64_t twice_min;   // the requirement is 2 ord_p(c_i) >= i r
    };
    bool pass = true;
    std::vector<Failure> failures;
};

/// Valuation criterion: 2 ord_p(c_i) >= i r for every nonzero c_i, i >= 1.
inline SupersingularReport is_supersingular(const LPolynomial& L) {
    SupersingularReport report;
    for (unsigned i = 1; i <= 2 * L.g; ++i) {
        if (L.coeffs[i] == 0) continue;
        Int v = L.coeffs[i];
        std::uint64_t ord = 0;
        while (v % Int(L.p) == 0) {
            v /= Int(L.p);
            ++ord;
        }
        if (2 * ord < static_cast<std::uint64_t>(i) * L.r) {
            report.pass = false;
            report.failures.push_back({i, ord, static_cast<std::uint64_t>(i) * L.r});
        }
    }
    return report;
}

/// The period (or the detection bound hit): smallest n with n r even and
/// S_n = -2g q^{n/2}, i.e. the smallest extension degree where the curve is
/// minimal.
struct PeriodInfo {
    unsigned s = 0;
    unsigned minimal_at = 0;
};

/// All s with phi(s) in {2g, 4g}, the candidate periods for a simple
/// Jacobian; phi(s) >= sqrt(s/2) bounds the scan at 2 (4g)^2.
inline std::vector<unsigned> period_candidates(unsigned g) {
    if (g < 1) throw input_error("period_candidates: g must be >= 1");
    std::vector<unsigned> out;
    const std::uint64_t bound = 2 * (4ull * g) * (4ull * g);
    for (std::uint64_t s = 1; s <= bound; ++s) {
        const std::uint64_t phi = euler_phi(s);
        if (phi == 2ull * g || phi == 4ull * g) out.push_back(static_cast<unsigned>(s));
    }
    return out;
}

inline unsigned default_period_bound(unsigned g) {
    return std::max(4u * g * g, 64u);
}

inline PeriodInfo detect_period(const LPolynomial& L, unsigned bound) {
    auto ss = is_supersingular(L);
    if (!ss.pass)
        throw math_error("detect_period: polynomial is not supersingular");
    TraceSequence seq = traces_from_coeffs(L, bound);
    for (unsigned n = 1; n <= bound; ++n) {
        if ((static_cast<std::uint64_t>(n) * L.r) % 2 != 0) continue;
        Int minimal = Int(-2) * Int(L.g) * ipow(Int(L.p), static_cast<std::uint64_t>(n) * L.r / 2);
        if (seq.at(n) == minimal) return PeriodInfo{n, n};
    }
    std::string hint;
    for (unsigned s : period_candidates(L.g)) {
        if (!hint.empty()) hint += ", ";
        hint += std::to_string(s);
        if (hint.size() > 60) {
            hint += ", ...";
            break;
        }
    }
    throw math_error("detect_period: no minimal extension degree within bound " +
                     std::to_string(bound) + "; phi-based candidates: " + hint);
}

inline PeriodInfo detect_period(const LPolynomial& L) {
    return detect_period(L, default_period_bound(L.g));
}

}  // namespace sszeta
