#pragma once

#include "sszeta/bigint.hpp"
#include "sszeta/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

namespace sszeta {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::uint64_t mod_pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp != 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

/// Legendre symbol (a/p) by Euler's criterion. p must be an odd prime.
inline int legendre_symbol(std::int64_t a, std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw input_error("legendre_symbol: p must be an odd prime");
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    std::uint64_t e = mod_pow_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

/// Description of F_{p^k} = F_p[x]/(modulus). Immutable after construction;
/// shareable across threads. Elements are length-k coefficient vectors with
/// entries in [0, p), constant term first.
class FieldDesc {
  public:
    using Coeffs = std::vector<std::uint64_t>;

    static constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 40;

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const Coeffs& modulus() const { return modulus_; }  // length k+1, monic
    const Int& size() const { return size_; }

    Coeffs zero() const { return Coeffs(k_, 0); }
    Coeffs one() const { return from_scalar(1); }
    Coeffs from_scalar(std::uint64_t v) const {
        Coeffs c(k_, 0);
        c[0] = v % p_;
        return c;
    }
    Coeffs gen() const {  // the class of x (equals 0 in a prime field)
        Coeffs c(k_, 0);
        if (k_ > 1) c[1] = 1;
        return c;
    }

    bool is_zero(const Coeffs& a) const {
        return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
    }

    void add_into(const Coeffs& a, const Coeffs& b, Coeffs& out) const {
        out.resize(k_);
        for (unsigned i = 0; i < k_; ++i) {
            std::uint64_t s = a[i] + b[i];
            out[i] = s >= p_ ? s - p_ : s;
        }
    }

    void sub_into(const Coeffs& a, const Coeffs& b, Coeffs& out) const {
        out.resize(k_);
        for (unsigned i = 0; i < k_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    }

    void scalar_mul_into(const Coeffs& a, std::uint64_t s, Coeffs& out) const {
        out.resize(k_);
        s %= p_;
        for (unsigned i = 0; i < k_; ++i)
            out[i] = static_cast<std::uint64_t>((unsigned __int128)a[i] * s % p_);
    }

    // out = a*b mod modulus; scratch holds the 2k-1 convolution.
    void mul_into(const Coeffs& a, const Coeffs& b, Coeffs& out, Coeffs& scratch) const {
        convolve(a, b, scratch);
        reduce(scratch, out);
    }

    Coeffs mul(const Coeffs& a, const Coeffs& b) const {
        Coeffs out, scratch;
        mul_into(a, b, out, scratch);
        return out;
    }

    Coeffs add(const Coeffs& a, const Coeffs& b) const {
        Coeffs out;
        add_into(a, b, out);
        return out;
    }

    Coeffs pow(const Coeffs& base, Int e) const {
        Coeffs acc = one(), b = base, scratch, tmp;
        while (e != 0) {
            if ((e & 1) != 0) {
                mul_into(acc, b, tmp, scratch);
                acc.swap(tmp);
            }
            mul_into(b, b, tmp, scratch);
            b.swap(tmp);
            e >>= 1;
        }
        return acc;
    }

    // Absolute trace to F_p as a scalar, via the precomputed table of basis
    // monomial traces (trace is F_p-linear in the coefficient vector).
    std::uint64_t trace(const Coeffs& a) const {
        unsigned __int128 acc = 0;
        for (unsigned i = 0; i < k_; ++i) acc += (unsigned __int128)a[i] * trace_table_[i];
        return static_cast<std::uint64_t>(acc % p_);
    }

    // Advance a coefficient vector to the next element in enumeration order
    // (base-p odometer, constant term least significant). Returns false on wrap.
    bool next_element(Coeffs& a) const {
        for (unsigned i = 0; i < k_; ++i) {
            if (++a[i] < p_) return true;
            a[i] = 0;
        }
        return false;
    }

    Coeffs element_at(std::uint64_t index) const {
        Coeffs c(k_, 0);
        for (unsigned i = 0; i < k_ && index != 0; ++i) {
            c[i] = index % p_;
            index /= p_;
        }
        return c;
    }

  private:
    friend FieldDesc build_field(std::uint64_t p, unsigned k);

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    Coeffs modulus_;
    Coeffs trace_table_;  // trace_table_[i] = Tr(x^i)
    Int size_;

    void convolve(const Coeffs& a, const Coeffs& b, Coeffs& scratch) const {
        scratch.assign(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (a[i] == 0) continue;
            unsigned __int128 ai = a[i];
            for (unsigned j = 0; j < k_; ++j)
                scratch[i + j] = static_cast<std::uint64_t>((scratch[i + j] + ai * b[j]) % p_);
        }
    }

    // Reduce a degree < 2k-1 coefficient vector modulo the monic modulus.
    void reduce(Coeffs& v, Coeffs& out) const {
        for (unsigned d = 2 * k_ - 2; d >= k_ && d < 2 * k_; --d) {
            std::uint64_t lead = v[d];
            if (lead == 0) continue;
            v[d] = 0;
            unsigned shift = d - k_;
            for (unsigned j = 0; j < k_; ++j) {
                if (modulus_[j] == 0) continue;
                unsigned __int128 sub = (unsigned __int128)lead * modulus_[j] % p_;
                std::uint64_t cur = v[shift + j];
                std::uint64_t s = static_cast<std::uint64_t>(sub);
                v[shift + j] = cur >= s ? cur - s : cur + p_ - s;
            }
        }
        out.assign(v.begin(), v.begin() + k_);
    }
};

namespace detail {

// Dense polynomial arithmetic over F_p, used for modulus search and
// squarefreeness checks. Vectors are coefficient lists, constant term first,
// trailing zeros trimmed.
struct PolyFp {
    static void trim(std::vector<std::uint64_t>& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static int deg(const std::vector<std::uint64_t>& a) { return static_cast<int>(a.size()) - 1; }

    static std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b, std::uint64_t p) {
        if (a.empty() || b.empty()) return {};
        std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            unsigned __int128 ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<std::uint64_t>((c[i + j] + ai * b[j]) % p);
        }
        return c;
    }

    // Remainder of a modulo monic-or-not b (b nonzero).
    static std::vector<std::uint64_t> rem(std::vector<std::uint64_t> a,
                                          const std::vector<std::uint64_t>& b, std::uint64_t p) {
        trim(a);
        const int db = deg(b);
        std::uint64_t inv_lead = mod_pow_u64(b.back(), p - 2, p);
        while (deg(a) >= db) {
            const int da = deg(a);
            std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)a.back() * inv_lead % p);
            for (int j = 0; j <= db; ++j) {
                unsigned __int128 sub = (unsigned __int128)f * b[j] % p;
                std::uint64_t& c = a[da - db + j];
                std::uint64_t s = static_cast<std::uint64_t>(sub);
                c = c >= s ? c - s : c + p - s;
            }
            trim(a);
        }
        return a;
    }

    static std::vector<std::uint64_t> gcd(std::vector<std::uint64_t> a,
                                          std::vector<std::uint64_t> b, std::uint64_t p) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            a = rem(std::move(a), b, p);
            a.swap(b);
        }
        if (!a.empty() && a.back() != 1) {  // make monic
            std::uint64_t inv = mod_pow_u64(a.back(), p - 2, p);
            for (auto& c : a) c = static_cast<std::uint64_t>((unsigned __int128)c * inv % p);
        }
        return a;
    }

    static std::vector<std::uint64_t> mulmod(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b,
                                             const std::vector<std::uint64_t>& mod,
                                             std::uint64_t p) {
        return rem(mul(a, b, p), mod, p);
    }

    static std::vector<std::uint64_t> powmod(std::vector<std::uint64_t> base, Int e,
                                             const std::vector<std::uint64_t>& mod,
                                             std::uint64_t p) {
        std::vector<std::uint64_t> acc{1};
        base = rem(std::move(base), mod, p);
        while (e != 0) {
            if ((e & 1) != 0) acc = mulmod(acc, base, mod, p);
            base = mulmod(base, base, mod, p);
            e >>= 1;
        }
        return acc;
    }

    static std::vector<std::uint64_t> derivative(const std::vector<std::uint64_t>& a,
                                                 std::uint64_t p) {
        std::vector<std::uint64_t> d;
        for (std::size_t i = 1; i < a.size(); ++i)
            d.push_back(static_cast<std::uint64_t>((unsigned __int128)a[i] * (i % p) % p));
        trim(d);
        return d;
    }

    // f monic of degree k is irreducible iff it shares no factor with
    // x^{p^i} - x for 1 <= i <= k/2.
    static bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
        const int k = deg(f);
        if (k < 1) return false;
        std::vector<std::uint64_t> x{0, 1};
        std::vector<std::uint64_t> frob = rem(x, f, p);
        for (int i = 1; i <= k / 2; ++i) {
            frob = powmod(frob, Int(p), f, p);  // now x^{p^i} mod f
            std::vector<std::uint64_t> diff = frob;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = diff[1] >= 1 ? diff[1] - 1 : p - 1;
            trim(diff);
            auto g = gcd(diff, f, p);
            if (deg(g) != 0) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Construct F_{p^k} with the deterministic modulus: the first monic
/// irreducible of degree k when the non-leading coefficients are read as a
/// base-p integer (smallest value wins).
inline FieldDesc build_field(std::uint64_t p, unsigned k) {
    if (p >= (std::uint64_t(1) << 31)) throw input_error("build_field: p must be < 2^31");
    if (!is_prime_u64(p)) throw input_error("build_field: p is not prime");
    if (k == 0) throw input_error("build_field: extension degree must be >= 1");

    FieldDesc f;
    f.p_ = p;
    f.k_ = k;
    f.size_ = ipow(Int(p), k);

    Int candidates = ipow(Int(p), k);
    for (Int v = 0; v < candidates; ++v) {
        std::vector<std::uint64_t> mod(k + 1, 0);
        Int rest = v;
        for (unsigned i = 0; i < k; ++i) {
            mod[i] = static_cast<std::uint64_t>(rest % p);
            rest /= p;
        }
        mod[k] = 1;
        if (detail::PolyFp::is_irreducible(mod, p)) {
            f.modulus_ = std::move(mod);
            break;
        }
    }

    // Tr(x^i) for the power basis, via conjugate sums (x^i)^{p^j} = (x^{p^j})^i.
    f.trace_table_.assign(k, 0);
    std::vector<FieldDesc::Coeffs> frob_powers;  // x^{p^j} as elements, j = 0..k-1
    FieldDesc::Coeffs xp = k == 1 ? f.from_scalar(1) : f.gen();
    for (unsigned j = 0; j < k; ++j) {
        frob_powers.push_back(xp);
        xp = f.pow(xp, Int(p));
    }
    for (unsigned i = 0; i < k; ++i) {
        FieldDesc::Coeffs sum = f.zero(), pw, scratch, tmp;
        for (unsigned j = 0; j < k; ++j) {
            pw = f.pow(frob_powers[j], Int(i));
            f.add_into(sum, pw, tmp);
            sum.swap(tmp);
        }
        // The trace of any element lies in the prime field.
        for (unsigned t = 1; t < k; ++t)
            if (sum[t] != 0) throw math_error("build_field: basis trace not scalar");
        f.trace_table_[i] = sum[0];
    }
    return f;
}

/// An element of a constructed field. Holds a non-owning pointer to its
/// FieldDesc, which must outlive the element.
class FieldElement {
  public:
    FieldElement(const FieldDesc& field, FieldDesc::Coeffs coeffs)
        : field_(&field), c_(std::move(coeffs)) {
        if (c_.size() != field.k()) throw input_error("FieldElement: wrong coefficient count");
        for (auto v : c_)
            if (v >= field.p()) throw input_error("FieldElement: coefficient out of range");
    }

    static FieldElement scalar(const FieldDesc& field, std::uint64_t v) {
        return FieldElement(field, field.from_scalar(v));
    }

    const FieldDesc& field() const { return *field_; }
    const FieldDesc::Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return field_->is_zero(c_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        FieldDesc::Coeffs out;
        a.field_->add_into(a.c_, b.c_, out);
        return FieldElement(*a.field_, std::move(out));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        FieldDesc::Coeffs out;
        a.field_->sub_into(a.c_, b.c_, out);
        return FieldElement(*a.field_, std::move(out));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return FieldElement(*a.field_, a.field_->mul(a.c_, b.c_));
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

    FieldElement pow(const Int& e) const { return FieldElement(*field_, field_->pow(c_, e)); }

  private:
    const FieldDesc* field_;
    FieldDesc::Coeffs c_;
};

/// Tr_{F_{p^k}/F_p}(x) as an integer in [0, p).
inline std::uint64_t trace_abs(const FieldElement& x) { return x.field().trace(x.coeffs()); }

/// Deterministic stream of all p^k field elements in base-p counter order
/// (constant coefficient least significant). Guarded at 2^40 elements.
class ElementRange {
  public:
    explicit ElementRange(const FieldDesc& field) : field_(&field) {
        if (field.size() > Int(FieldDesc::kEnumerationGuard))
            throw input_error("enumerate: field exceeds the 2^40 enumeration guard");
        count_ = static_cast<std::uint64_t>(field.size());
    }

    class iterator {
      public:
        iterator(const FieldDesc* f, std::uint64_t idx)
            : field_(f), index_(idx), current_(f->element_at(idx)) {}

        const FieldDesc::Coeffs& operator*() const { return current_; }
        iterator& operator++() {
            ++index_;
            field_->next_element(current_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return index_ != o.index_; }

      private:
        const FieldDesc* field_;
        std::uint64_t index_;
        FieldDesc::Coeffs current_;
    };

    iterator begin() const { return iterator(field_, 0); }
    iterator end() const { return iterator(field_, count_); }
    std::uint64_t count() const { return count_; }

  private:
    const FieldDesc* field_;
    std::uint64_t count_ = 0;
};

inline ElementRange enumerate(const FieldDesc& field) { return ElementRange(field); }

}  // namespace sszeta
