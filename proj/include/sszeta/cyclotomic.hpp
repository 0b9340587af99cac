#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"
#include "sszeta/field.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sszeta {

using ZPoly = std::vector<Int>;  // constant term first, trailing zeros trimmed

namespace detail {

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
inline ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ztrim(num);
    if (den.empty() || den.back() != 1) throw math_error("zdiv_exact: divisor must be monic");
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        if (!num.empty()) throw math_error("zdiv_exact: inexact division");
        return {};
    }
    ZPoly quot(num.size() - dd, Int(0));
    for (std::size_t i = num.size(); i-- > dd;) {
        Int lead = num[i];
        if (lead == 0) continue;
        quot[i - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
    }
    ztrim(num);
    if (!num.empty()) throw math_error("zdiv_exact: inexact division");
    return quot;
}

// Per-conductor context: the cyclotomic polynomial and x^j mod Phi_n for
// 0 <= j < n (integer coefficients since Phi_n is monic over Z).
struct CycloContext {
    unsigned n = 0;
    unsigned phi = 0;
    ZPoly phi_poly;
    std::vector<ZPoly> reduced_powers;  // size n, entries of degree < phi
    std::vector<std::uint64_t> units;   // 1 <= k <= n, gcd(k, n) = 1
};

inline const CycloContext& cyclo_context(unsigned n) {
    static std::map<unsigned, CycloContext> cache;
    static std::mutex mutex;
    if (n < 1) throw input_error("cyclotomic: n must be >= 1");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built from the bottom up;
    // recursion on the cache itself would deadlock, so divisors are resolved
    // by direct lookup after being computed in increasing order.
    std::vector<unsigned> stack;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0 && !cache.count(d)) stack.push_back(d);
    for (unsigned d : stack) {
        ZPoly num(static_cast<std::size_t>(d) + 1, Int(0));
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) num = zdiv_exact(std::move(num), cache.at(e).phi_poly);
        CycloContext ctx;
        ctx.n = d;
        ctx.phi_poly = std::move(num);
        ctx.phi = static_cast<unsigned>(ctx.phi_poly.size() - 1);
        ctx.reduced_powers.resize(d);
        ZPoly cur{Int(1)};
        for (unsigned j = 0; j < d; ++j) {
            ctx.reduced_powers[j] = cur;
            ctx.reduced_powers[j].resize(ctx.phi, Int(0));
            // cur <- x * cur mod Phi_d
            cur.insert(cur.begin(), Int(0));
            if (cur.size() > ctx.phi) {
                Int lead = cur.back();
                cur.pop_back();
                for (unsigned t = 0; t < ctx.phi; ++t) cur[t] -= lead * ctx.phi_poly[t];
            }
            cur.resize(ctx.phi);
        }
        for (std::uint64_t k = 1; k <= d; ++k)
            if (std::gcd(k, static_cast<std::uint64_t>(d)) == 1) ctx.units.push_back(k);
        cache.emplace(d, std::move(ctx));
    }
    return cache.at(n);
}

}  // namespace detail

/// Phi_n as an integer polynomial, constant term first.
inline ZPoly cyclotomic_poly(unsigned n) { return detail::cyclo_context(n).phi_poly; }

/// An element of Q(w_n) in the power basis 1, w, ..., w^{phi(n)-1}, reduced
/// modulo Phi_n, with exact rational coordinates.
class CycloElement {
  public:
    CycloElement(unsigned n, std::vector<Rat> coeffs) : n_(n), c_(std::move(coeffs)) {
        const auto& ctx = detail::cyclo_context(n);
        if (c_.size() != ctx.phi)
            throw input_error("CycloElement: expected phi(n) = " + std::to_string(ctx.phi) +
                              " coordinates");
    }

    static CycloElement zero(unsigned n) {
        return CycloElement(n, std::vector<Rat>(detail::cyclo_context(n).phi, Rat(0)));
    }

    static CycloElement rational(unsigned n, const Rat& v) {
        auto e = zero(n);
        e.c_[0] = v;
        return e;
    }

    /// w_n^e for any integer e (reduced mod n).
    static CycloElement root_power(unsigned n, std::int64_t e) {
        const auto& ctx = detail::cyclo_context(n);
        std::int64_t r = e % static_cast<std::int64_t>(n);
        if (r < 0) r += n;
        auto out = zero(n);
        const ZPoly& pw = ctx.reduced_powers[static_cast<std::size_t>(r)];
        for (unsigned i = 0; i < ctx.phi; ++i) out.c_[i] = Rat(pw[i]);
        return out;
    }

    unsigned conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (v != 0) return false;
        return true;
    }

    std::optional<Rat> as_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return std::nullopt;
        return c_[0];
    }

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b) {
        a.require_same(b);
        auto out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
        return out;
    }
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b) {
        a.require_same(b);
        auto out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
        return out;
    }
    CycloElement operator-() const {
        auto out = *this;
        for (auto& v : out.c_) v = -v;
        return out;
    }

    friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
        a.require_same(b);
        const auto& ctx = detail::cyclo_context(a.n_);
        const unsigned phi = ctx.phi;
        std::vector<Rat> conv(2 * static_cast<std::size_t>(phi) - 1, Rat(0));
        for (unsigned i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j < phi; ++j) conv[i + j] += a.c_[i] * b.c_[j];
        }
        // reduce modulo the monic Phi_n
        for (std::size_t d = conv.size(); d-- > phi;) {
            Rat lead = conv[d];
            if (lead == 0) continue;
            conv[d] = 0;
            for (unsigned j = 0; j < phi; ++j)
                conv[d - phi + j] -= lead * Rat(ctx.phi_poly[j]);
        }
        conv.resize(phi);
        return CycloElement(a.n_, std::move(conv));
    }

    friend CycloElement operator*(const Rat& s, const CycloElement& a) {
        auto out = a;
        for (auto& v : out.c_) v *= s;
        return out;
    }

    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// Galois substitution w -> w^k for k coprime to n.
    CycloElement substituted(std::uint64_t k) const {
        const auto& ctx = detail::cyclo_context(n_);
        if (std::gcd(k, static_cast<std::uint64_t>(n_)) != 1)
            throw input_error("substituted: k must be coprime to n");
        auto out = zero(n_);
        for (unsigned i = 0; i < ctx.phi; ++i) {
            if (c_[i] == 0) continue;
            const ZPoly& pw = ctx.reduced_powers[(i * k) % n_];
            for (unsigned j = 0; j < ctx.phi; ++j) out.c_[j] += c_[i] * Rat(pw[j]);
        }
        return out;
    }

  private:
    void require_same(const CycloElement& o) const {
        if (n_ != o.n_) throw input_error("cyclotomic arithmetic: conductor mismatch");
    }

    unsigned n_;
    std::vector<Rat> c_;
};

/// Exact Galois trace to Q, the explicit conjugate sum over all units.
inline Rat galois_trace(const CycloElement& c) {
    const auto& ctx = detail::cyclo_context(c.conductor());
    CycloElement sum = CycloElement::zero(c.conductor());
    for (std::uint64_t k : ctx.units) sum = sum + c.substituted(k);
    auto r = sum.as_rational();
    if (!r) throw math_error("galois_trace: conjugate sum is not rational");
    return *r;
}

/// a + b sqrt(p) with exact rationals; arithmetic uses (sqrt p)^2 = p.
struct QuadElement {
    std::uint64_t p = 0;
    Rat a;
    Rat b;

    QuadElement conj() const { return {p, a, -b}; }

    friend QuadElement operator+(const QuadElement& x, const QuadElement& y) {
        return {x.p, x.a + y.a, x.b + y.b};
    }
    friend QuadElement operator-(const QuadElement& x, const QuadElement& y) {
        return {x.p, x.a - y.a, x.b - y.b};
    }
    friend QuadElement operator*(const QuadElement& x, const QuadElement& y) {
        return {x.p, x.a * y.a + Rat(Int(x.p)) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        return x.p == y.p && x.a == y.a && x.b == y.b;
    }
};

/// Whether sqrt(p) lies in Q(w_n): p | n for p = 1 mod 4, 4p | n for
/// p = 3 mod 4, 8 | n for p = 2.
inline bool sqrt_p_member(unsigned n, std::uint64_t p) {
    if (!is_prime_u64(p)) throw input_error("sqrt_p_member: p is not prime");
    if (p == 2) return n % 8 == 0;
    if (p % 4 == 1) return n % p == 0;
    return n % (4 * p) == 0;
}

/// The explicit element of Q(w_n) squaring to p, when the membership
/// condition holds: the Gauss-sum image for p = 1 mod 4, -i times the
/// Gauss-sum image for p = 3 mod 4, and w8 - w8^3 for p = 2. The square is
/// verified exactly.
inline std::optional<CycloElement> sqrt_p_embed(unsigned n, std::uint64_t p) {
    if (!sqrt_p_member(n, p)) return std::nullopt;
    CycloElement e = CycloElement::zero(n);
    if (p == 2) {
        e = CycloElement::root_power(n, n / 8) - CycloElement::root_power(n, 3 * (n / 8));
    } else {
        CycloElement gauss = CycloElement::zero(n);  // sum_j (j/p) w_n^{j n/p} = sqrt(p*)
        const std::uint64_t step = n / p;
        for (std::uint64_t j = 1; j < p; ++j) {
            int chi = legendre_symbol(static_cast<std::int64_t>(j), p);
            if (chi == 1)
                gauss = gauss + CycloElement::root_power(n, static_cast<std::int64_t>(j * step));
            else
                gauss = gauss - CycloElement::root_power(n, static_cast<std::int64_t>(j * step));
        }
        if (p % 4 == 1)
            e = gauss;
        else
            e = -(CycloElement::root_power(n, n / 4) * gauss);  // -i * (i sqrt p)
    }
    if (!(e * e == CycloElement::rational(n, Rat(Int(p)))))
        throw math_error("sqrt_p_embed: constructed element does not square to p");
    return e;
}

/// The unit classes of Q(w_n) split by whether they fix sqrt(p): for odd p
/// the symbol ((-1)^((k-1)/2) k / p), read as (k/p) when p = 1 mod 4; for
/// p = 2 the classes k = +-1 mod 8 versus k = +-3 mod 8.
struct IndexSets {
    unsigned n = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> plus;
    std::vector<std::uint64_t> minus;
};

inline IndexSets index_sets(unsigned n, std::uint64_t p) {
    if (!sqrt_p_member(n, p))
        throw input_error("index_sets: sqrt(" + std::to_string(p) + ") is not in Q(w_" +
                          std::to_string(n) + ")");
    const auto& ctx = detail::cyclo_context(n);
    IndexSets sets;
    sets.n = n;
    sets.p = p;
    for (std::uint64_t k : ctx.units) {
        int verdict;
        if (p == 2) {
            const std::uint64_t k8 = k % 8;
            verdict = (k8 == 1 || k8 == 7) ? 1 : -1;
        } else if (p % 4 == 1) {
            verdict = legendre_symbol(static_cast<std::int64_t>(k % p), p);
        } else {
            // 4p | n makes every unit odd, so (k-1)/2 is well defined
            const std::int64_t sign = (k % 4 == 1) ? 1 : -1;
            verdict = legendre_symbol(sign * static_cast<std::int64_t>(k % p), p);
        }
        if (verdict == 1)
            sets.plus.push_back(k);
        else if (verdict == -1)
            sets.minus.push_back(k);
        else
            throw math_error("index_sets: unit shares a factor with p");
    }
    if (sets.plus.size() != sets.minus.size() ||
        sets.plus.size() * 2 != ctx.units.size())
        throw math_error("index_sets: the split is not an even partition of the units");
    return sets;
}

/// Independent witness for a NotMember verdict: a prime l = 1 mod n with
/// (p/l) = -1. If sqrt(p) were in Q(w_n), every such l would split in
/// Q(sqrt p) and p would be a residue mod l. Searches l < 10^6.
inline std::optional<std::uint64_t> nonmembership_certificate(unsigned n, std::uint64_t p) {
    if (sqrt_p_member(n, p))
        throw input_error("nonmembership_certificate: the membership lemma says member");
    for (std::uint64_t l = 1 + n; l < 1000000; l += n) {
        if (!is_prime_u64(l)) continue;
        if (l == 2 || l == p) continue;
        if (legendre_symbol(static_cast<std::int64_t>(p % l), l) == -1) return l;
    }
    return std::nullopt;
}

/// Projection of an element of the quadratic subfield onto (a, b) with
/// c = a + b sqrt(p), via Galois traces; the recombination is verified
/// exactly and failure means c is not in Q(sqrt p).
inline QuadElement quad_project(const CycloElement& c, std::uint64_t p) {
    const unsigned n = c.conductor();
    auto embed = sqrt_p_embed(n, p);
    if (!embed)
        throw input_error("quad_project: sqrt(" + std::to_string(p) + ") is not in Q(w_" +
                          std::to_string(n) + ")");
    const Rat phi = Rat(Int(euler_phi(n)));
    const Rat a = galois_trace(c) / phi;
    const Rat b = galois_trace(c * *embed) / (Rat(Int(p)) * phi);
    CycloElement recombined =
        CycloElement::rational(n, a) + (b * *embed);
    if (!(recombined == c))
        throw math_error("quad_project: element is not in the quadratic subfield Q(sqrt " +
                         std::to_string(p) + ")");
    return QuadElement{p, a, b};
}

using QuadPoly = std::vector<QuadElement>;  // constant term first

/// The two conjugate factors of Phi_n over Q(sqrt p), expanded from the
/// index-set split of the primitive roots and verified to multiply back to
/// Phi_n exactly.
inline std::pair<QuadPoly, QuadPoly> phi_split(unsigned n, std::uint64_t p) {
    const IndexSets sets = index_sets(n, p);

    auto expand = [&](const std::vector<std::uint64_t>& idx) {
        std::vector<CycloElement> poly{CycloElement::rational(n, Rat(1))};
        for (std::uint64_t j : idx) {
            const CycloElement root = CycloElement::root_power(n, static_cast<std::int64_t>(j));
            std::vector<CycloElement> next(poly.size() + 1, CycloElement::zero(n));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = next[i + 1] + poly[i];
                next[i] = next[i] - root * poly[i];
            }
            poly = std::move(next);
        }
        QuadPoly out;
        out.reserve(poly.size());
        for (const auto& coeff : poly) out.push_back(quad_project(coeff, p));
        return out;
    };

    QuadPoly plus = expand(sets.plus);
    QuadPoly minus = expand(sets.minus);

    // product must equal Phi_n: rational parts match, sqrt parts vanish
    const ZPoly phi_poly = cyclotomic_poly(n);
    QuadPoly prod(plus.size() + minus.size() - 1, QuadElement{p, Rat(0), Rat(0)});
    for (std::size_t i = 0; i < plus.size(); ++i)
        for (std::size_t j = 0; j < minus.size(); ++j) prod[i + j] = prod[i + j] + plus[i] * minus[j];
    if (prod.size() != phi_poly.size())
        throw math_error("phi_split: degree mismatch against Phi_n");
    for (std::size_t i = 0; i < prod.size(); ++i)
        if (prod[i].b != 0 || prod[i].a != Rat(phi_poly[i]))
            throw math_error("phi_split: product does not equal Phi_n at degree " +
                             std::to_string(i));
    return {std::move(plus), std::move(minus)};
}

/// The conjugate pair (sum_{j in I+} w^{j l}, sum_{j in I-} w^{j l}),
/// verified to have matching rational parts and opposite sqrt parts.
inline std::pair<QuadElement, QuadElement> power_sum_pm(unsigned n, std::uint64_t p,
                                                        std::int64_t l) {
    const IndexSets sets = index_sets(n, p);
    std::int64_t lm = l % static_cast<std::int64_t>(n);
    if (lm < 0) lm += n;
    auto sum_over = [&](const std::vector<std::uint64_t>& idx) {
        CycloElement sum = CycloElement::zero(n);
        for (std::uint64_t j : idx)
            sum = sum + CycloElement::root_power(
                            n, static_cast<std::int64_t>((j * static_cast<std::uint64_t>(lm)) % n));
        return sum;
    };
    QuadElement plus = quad_project(sum_over(sets.plus), p);
    QuadElement minus = quad_project(sum_over(sets.minus), p);
    if (!(minus == plus.conj()))
        throw math_error("power_sum_pm: sums are not quadratic conjugates");
    return {plus, minus};
}

/// The quadratic Gauss sum sum_j (j/p) w_p^j; its square is verified to be
/// p for p = 1 mod 4 and -p for p = 3 mod 4.
inline CycloElement gauss_sum(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw input_error("gauss_sum: p must be an odd prime");
    const unsigned n = static_cast<unsigned>(p);
    CycloElement g = CycloElement::zero(n);
    for (std::uint64_t j = 1; j < p; ++j) {
        if (legendre_symbol(static_cast<std::int64_t>(j), p) == 1)
            g = g + CycloElement::root_power(n, static_cast<std::int64_t>(j));
        else
            g = g - CycloElement::root_power(n, static_cast<std::int64_t>(j));
    }
    const Int p_star = p % 4 == 1 ? Int(p) : -Int(p);
    if (!(g * g == CycloElement::rational(n, Rat(p_star))))
        throw math_error("gauss_sum: square does not equal p*");
    return g;
}

}  // namespace sszeta
