#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/field.hpp"
#include "sszeta/traces.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace sszeta {

enum class CurveKind { artin_schreier, hyperelliptic, plane_affine };

/// A curve family instance over F_{p^r}:
///   artin_schreier:  y^p - y = f(x),  gcd(deg f, p) = 1, deg f >= 2
///   hyperelliptic:   y^2 = f(x),      p odd, deg f odd >= 3, f squarefree
///   plane_affine:    y^2 = f(x) counted exhaustively, genus and infinity
///                    count supplied by the caller, nothing verified
struct CurveSpec {
    CurveKind kind;
    std::uint64_t p = 0;
    unsigned r = 1;
    std::vector<Int> rhs;  // f coefficients, constant first, exact integers
    std::optional<std::uint64_t> genus_override;     // plane_affine
    std::optional<Int> points_at_infinity;           // plane_affine

    Int q() const { return ipow(Int(p), r); }

    // f reduced mod p with trailing zeros trimmed
    std::vector<std::uint64_t> reduced_rhs() const {
        std::vector<std::uint64_t> f;
        f.reserve(rhs.size());
        for (const Int& c : rhs) {
            Int m = c % Int(p);
            if (m < 0) m += Int(p);
            f.push_back(static_cast<std::uint64_t>(m));
        }
        while (!f.empty() && f.back() == 0) f.pop_back();
        return f;
    }
};

inline CurveSpec make_curve_spec(CurveKind kind, std::uint64_t p, unsigned r,
                                 std::vector<Int> rhs,
                                 std::optional<std::uint64_t> genus = std::nullopt,
                                 std::optional<Int> infinity = std::nullopt) {
    if (!is_prime_u64(p)) throw input_error("curve: p is not prime");
    if (r < 1) throw input_error("curve: base extension degree must be >= 1");
    CurveSpec spec{kind, p, r, std::move(rhs), genus, infinity};
    const auto f = spec.reduced_rhs();
    const std::size_t deg = f.empty() ? 0 : f.size() - 1;
    switch (kind) {
        case CurveKind::artin_schreier:
            if (deg < 2) throw input_error("artin_schreier: deg f must be >= 2");
            if (deg % p == 0) throw input_error("artin_schreier: p must not divide deg f");
            break;
        case CurveKind::hyperelliptic: {
            if (p == 2) throw input_error("hyperelliptic: p must be odd");
            if (deg < 3 || deg % 2 == 0)
                throw input_error("hyperelliptic: deg f must be odd and >= 3");
            auto d = detail::PolyFp::derivative(f, p);
            auto g = detail::PolyFp::gcd(f, d, p);
            if (detail::PolyFp::deg(g) != 0)
                throw input_error("hyperelliptic: f is not squarefree");
            break;
        }
        case CurveKind::plane_affine:
            if (!spec.genus_override) throw input_error("plane_affine: genus is required");
            if (!spec.points_at_infinity)
                throw input_error("plane_affine: points_at_infinity is required");
            break;
    }
    return spec;
}

inline std::uint64_t genus(const CurveSpec& spec) {
    const auto f = spec.reduced_rhs();
    const std::uint64_t deg = f.empty() ? 0 : f.size() - 1;
    switch (spec.kind) {
        case CurveKind::artin_schreier:
            return (spec.p - 1) * (deg - 1) / 2;
        case CurveKind::hyperelliptic:
            return (deg - 1) / 2;
        case CurveKind::plane_affine:
            return *spec.genus_override;
    }
    throw input_error("curve: unknown kind");
}

namespace detail {

// Horner evaluation of the reduced rhs at a field element.
inline void eval_rhs(const FieldDesc& F, const std::vector<std::uint64_t>& f,
                     const FieldDesc::Coeffs& x, FieldDesc::Coeffs& out,
                     FieldDesc::Coeffs& scratch, FieldDesc::Coeffs& tmp) {
    if (f.empty()) {
        out.assign(F.k(), 0);
        return;
    }
    out = F.from_scalar(f.back());
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        F.mul_into(out, x, tmp, scratch);
        tmp[0] = (tmp[0] + f[i] % F.p()) % F.p();
        out.swap(tmp);
    }
}

// Splits [0, total) into contiguous chunks and sums worker(lo, hi) results.
// Workers are pure; the chunked sum equals the serial sum exactly.
template <typename Worker>
Int parallel_sum(std::uint64_t total, Worker worker) {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads < 2 || total < (std::uint64_t(1) << 15)) return worker(0, total);
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, 8));
    std::vector<Int> partial(threads, Int(0));
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] {
            try {
                partial[t] = worker(lo, hi);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Int sum = 0;
    for (const Int& v : partial) sum += v;
    return sum;
}

}  // namespace detail

/// #X(F_{q^n}) by exhaustive enumeration. Deterministic; may partition the
/// x-enumeration across threads.
inline Int count_points(const CurveSpec& spec, unsigned n) {
    if (n < 1) throw input_error("count_points: n must be >= 1");
    const FieldDesc F = build_field(spec.p, spec.r * n);
    if (F.size() > Int(FieldDesc::kEnumerationGuard))
        throw input_error("count_points: field exceeds the 2^40 enumeration guard");
    const std::uint64_t total = static_cast<std::uint64_t>(F.size());
    const auto f = spec.reduced_rhs();

    switch (spec.kind) {
        case CurveKind::artin_schreier: {
            // y^p - y = c has p solutions iff Tr(c) = 0, none otherwise.
            Int zero_traces = detail::parallel_sum(total, [&](std::uint64_t lo, std::uint64_t hi) {
                FieldDesc::Coeffs x = F.element_at(lo), fx, scratch, tmp;
                std::uint64_t cnt = 0;
                for (std::uint64_t i = lo; i < hi; ++i) {
                    detail::eval_rhs(F, f, x, fx, scratch, tmp);
                    if (F.trace(fx) == 0) ++cnt;
                    F.next_element(x);
                }
                return Int(cnt);
            });
            return zero_traces * Int(spec.p) + 1;
        }
        case CurveKind::hyperelliptic: {
            // 1 + chi(f(x)) solutions per x, chi the quadratic character.
            const Int half = (F.size() - 1) / 2;
            Int affine = detail::parallel_sum(total, [&](std::uint64_t lo, std::uint64_t hi) {
                FieldDesc::Coeffs x = F.element_at(lo), fx, scratch, tmp;
                std::int64_t cnt = 0;
                const auto one = F.one();
                const auto minus_one = F.from_scalar(F.p() - 1);
                for (std::uint64_t i = lo; i < hi; ++i) {
                    detail::eval_rhs(F, f, x, fx, scratch, tmp);
                    if (F.is_zero(fx)) {
                        cnt += 1;
                    } else {
                        auto chi = F.pow(fx, half);
                        if (chi == one)
                            cnt += 2;
                        else if (chi != minus_one)
                            throw math_error("quadratic character out of {-1,0,1}");
                    }
                    F.next_element(x);
                }
                return Int(cnt);
            });
            return affine + 1;
        }
        case CurveKind::plane_affine: {
            // Exhaustive (x, y) solution count of y^2 = f(x): tally squares
            // first, then look each f(x) up.
            std::unordered_map<std::uint64_t, std::uint32_t> squares;
            squares.reserve(total);
            {
                FieldDesc::Coeffs y = F.element_at(0), y2, scratch;
                for (std::uint64_t i = 0; i < total; ++i) {
                    F.mul_into(y, y, y2, scratch);
                    std::uint64_t key = 0, mult = 1;
                    for (unsigned j = 0; j < F.k(); ++j) {
                        key += y2[j] * mult;
                        mult *= F.p();
                    }
                    ++squares[key];
                    F.next_element(y);
                }
            }
            Int affine = detail::parallel_sum(total, [&](std::uint64_t lo, std::uint64_t hi) {
                FieldDesc::Coeffs x = F.element_at(lo), fx, scratch, tmp;
                std::uint64_t cnt = 0;
                for (std::uint64_t i = lo; i < hi; ++i) {
                    detail::eval_rhs(F, f, x, fx, scratch, tmp);
                    std::uint64_t key = 0, mult = 1;
                    for (unsigned j = 0; j < F.k(); ++j) {
                        key += fx[j] * mult;
                        mult *= F.p();
                    }
                    auto it = squares.find(key);
                    if (it != squares.end()) cnt += it->second;
                    F.next_element(x);
                }
                return Int(cnt);
            });
            return affine + *spec.points_at_infinity;
        }
    }
    throw input_error("curve: unknown kind");
}

/// S_n = #X(F_{q^n}) - (q^n + 1), checked against the Weil bound.
inline Int trace_number(const CurveSpec& spec, unsigned n) {
    Int s = count_points(spec, n) - ipow(spec.q(), n) - 1;
    const std::uint64_t g = genus(spec);
    Int bound = Int(4) * Int(g) * Int(g) * ipow(spec.q(), n);
    if (s * s > bound)
        throw math_error("trace S_" + std::to_string(n) + " = " + s.str() +
                         " violates the Weil bound");
    return s;
}

inline TraceSequence trace_sequence(const CurveSpec& spec, unsigned N) {
    TraceSequence seq{spec.q(), genus(spec), {}};
    for (unsigned n = 1; n <= N; ++n) seq.set(n, trace_number(spec, n));
    return seq;
}

}  // namespace sszeta
