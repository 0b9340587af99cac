#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/field.hpp"
#include "sszeta/traces.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace sszeta {

enum class Branch {
    even_mr,                // q odd, m r even: plain power-of-q scaling
    odd_mr_char,            // q odd, m r odd, p does not divide t: character sign
    odd_mr_p_divides_t,     // q odd, m r odd, p divides t: plain scaling
    even_q_even_mr,         // q even, m r even
    even_q_odd_mr,          // q even, m r odd: sign (-1)^((t^2-1)/8)
};

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::even_mr: return "even_mr";
        case Branch::odd_mr_char: return "odd_mr_char";
        case Branch::odd_mr_p_divides_t: return "odd_mr_p_divides_t";
        case Branch::even_q_even_mr: return "even_q_even_mr";
        case Branch::even_q_odd_mr: return "even_q_odd_mr";
    }
    return "?";
}

/// How to push S_m out to S_n = sign * p^exponent * S_m, where m = gcd(n, s).
struct ReductionPlan {
    unsigned n = 0;
    unsigned s = 0;
    unsigned m = 0;
    unsigned t = 0;  // n / m
    std::uint64_t p = 0;
    Branch branch = Branch::even_mr;
    std::uint64_t exponent = 0;  // (n - m) r / 2
    int sign = 1;
};

/// The sign picked up when crossing an odd m r step: for odd p the Legendre
/// symbol of (-1)^((t-1)/2) t, for p = 2 the value (-1)^((t^2-1)/8).
/// Defined only for odd t (and p not dividing t when p is odd).
inline int extension_character(std::uint64_t t, std::uint64_t p) {
    if (t % 2 == 0)
        throw input_error("extension_character: t must be odd (t = " + std::to_string(t) + ")");
    if (p == 2) {
        const std::uint64_t t8 = t % 8;
        return (t8 == 1 || t8 == 7) ? 1 : -1;
    }
    if (t % p == 0)
        throw input_error("extension_character: p divides t, the character branch does not apply");
    const std::int64_t signed_t =
        (t % 4 == 1 ? 1 : -1) * static_cast<std::int64_t>(t % p);
    return legendre_symbol(signed_t, p);
}

inline ReductionPlan plan_reduction(unsigned n, unsigned s, std::uint64_t p, unsigned r) {
    if (n < 1 || s < 1 || r < 1) throw input_error("plan_reduction: n, s, r must be >= 1");
    if (!is_prime_u64(p)) throw input_error("plan_reduction: p is not prime");
    const unsigned m = std::gcd(n, s);
    const unsigned t = n / m;
    const std::uint64_t nm_r = static_cast<std::uint64_t>(n - m) * r;
    if (nm_r % 2 != 0)
        throw math_error("plan_reduction: (n-m)r = " + std::to_string(nm_r) +
                         " is odd; q^((n-m)/2) is not an integer (is s r even?)");
    ReductionPlan plan;
    plan.n = n;
    plan.s = s;
    plan.m = m;
    plan.t = t;
    plan.p = p;
    plan.exponent = nm_r / 2;
    const bool mr_even = (static_cast<std::uint64_t>(m) * r) % 2 == 0;
    if (p == 2) {
        plan.branch = mr_even ? Branch::even_q_even_mr : Branch::even_q_odd_mr;
        plan.sign = mr_even ? 1 : extension_character(t, 2);
    } else if (mr_even) {
        plan.branch = Branch::even_mr;
        plan.sign = 1;
    } else if (t % p == 0) {
        plan.branch = Branch::odd_mr_p_divides_t;
        plan.sign = 1;
    } else {
        plan.branch = Branch::odd_mr_char;
        plan.sign = extension_character(t, p);
    }
    return plan;
}

inline Int extend_trace(const Int& S_m, const ReductionPlan& plan) {
    return Int(plan.sign) * ipow(Int(plan.p), plan.exponent) * S_m;
}

/// Batch extension: S_n for n = 1..N from the trace numbers at the divisors
/// of s. The map must contain S_d for every d = gcd(n, s) that comes up.
inline TraceSequence extend_sequence(const std::map<unsigned, Int>& traces_at_divisors,
                                     unsigned s, std::uint64_t p, unsigned r, unsigned N) {
    TraceSequence seq{ipow(Int(p), r), std::nullopt, {}};
    for (unsigned n = 1; n <= N; ++n) {
        const unsigned m = std::gcd(n, s);
        auto it = traces_at_divisors.find(m);
        if (it == traces_at_divisors.end())
            throw input_error("extend_sequence: missing trace at divisor " + std::to_string(m));
        seq.set(n, extend_trace(it->second, plan_reduction(n, s, p, r)));
    }
    return seq;
}

}  // namespace sszeta
