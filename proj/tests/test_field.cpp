#include "sszeta/field.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

using namespace sszeta;

namespace {

using Poly = std::vector<std::uint64_t>;

// Test-side polynomial remainder, independent of the library's PolyFp.
Poly oracle_rem(Poly a, const Poly& b, std::uint64_t p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= b.size()) {
        std::uint64_t lead = a.back();  // b is monic here
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t& c = a[a.size() - b.size() + j];
            std::uint64_t sub = lead * b[j] % p;
            c = c >= sub ? c - sub : c + p - sub;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Irreducible iff no monic divisor of degree 1..k/2, by trial division over
// every candidate divisor.
bool oracle_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div(d + 1, 0);
            std::uint64_t rest = v;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = rest % p;
                rest /= p;
            }
            div[d] = 1;
            if (oracle_rem(f, div, p).empty()) return false;
        }
    }
    return true;
}

// First irreducible monic degree-k polynomial in base-p value order.
Poly oracle_first_irreducible(std::uint64_t p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f(k + 1, 0);
        std::uint64_t rest = v;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[k] = 1;
        if (oracle_irreducible(f, p)) return f;
    }
    return {};
}

}  // namespace

TEST_CASE("build_field picks the expected modulus") {
    CHECK(build_field(5, 1).modulus() == Poly{0, 1});  // plain x, elements are scalars
    CHECK(build_field(2, 3).modulus() == Poly{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(build_field(5, 2).modulus() == Poly{2, 0, 1});     // x^2 + 2
}

TEST_CASE("build_field modulus matches the exhaustive-search oracle") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned k = 1; k <= 5; ++k) {
            CAPTURE(p, k);
            CHECK(build_field(p, k).modulus() == oracle_first_irreducible(p, k));
        }
    }
}

TEST_CASE("build_field is deterministic") {
    auto a = build_field(3, 4);
    auto b = build_field(3, 4);
    CHECK(a.modulus() == b.modulus());
}

TEST_CASE("build_field rejects bad parameters") {
    CHECK_THROWS_AS(build_field(6, 2), input_error);
    CHECK_THROWS_AS(build_field(1, 2), input_error);
    CHECK_THROWS_AS(build_field(5, 0), input_error);
    CHECK_THROWS_AS(build_field(std::uint64_t(1) << 32, 1), input_error);
}

TEST_CASE("absolute trace") {
    SECTION("identity on a prime field") {
        auto F5 = build_field(5, 1);
        CHECK(trace_abs(FieldElement::scalar(F5, 3)) == 3);
    }
    SECTION("lands in the prime field over F_4") {
        auto F4 = build_field(2, 2);
        for (const auto& c : enumerate(F4)) {
            FieldElement x(F4, c);
            CHECK(trace_abs(x) <= 1);
            // direct definition: x + x^2
            auto direct = x + x * x;
            CHECK(FieldElement::scalar(F4, trace_abs(x)) == direct);
        }
    }
    SECTION("kernel of the trace on F_8 has 4 elements") {
        auto F8 = build_field(2, 3);
        int zeros = 0;
        for (const auto& c : enumerate(F8))
            if (F8.trace(c) == 0) ++zeros;
        CHECK(zeros == 4);
    }
}

TEST_CASE("trace kernel has p^(k-1) elements") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned k = 1; k <= 6; ++k) {
            auto F = build_field(p, k);
            std::uint64_t zeros = 0;
            for (const auto& c : enumerate(F))
                if (F.trace(c) == 0) ++zeros;
            std::uint64_t expect = 1;
            for (unsigned i = 0; i + 1 < k; ++i) expect *= p;
            CAPTURE(p, k);
            CHECK(zeros == expect);
        }
    }
}

TEST_CASE("Frobenius fixes the trace") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}}) {
        auto F = build_field(p, k);
        for (const auto& c : enumerate(F)) {
            FieldElement x(F, c);
            CHECK(trace_abs(x.pow(Int(p))) == trace_abs(x));
        }
    }
}

TEST_CASE("legendre_symbol basics") {
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(2, 7) == 1);   // squares mod 7: {1, 2, 4}
    CHECK(legendre_symbol(3, 5) == -1);  // squares mod 5: {1, 4}
    CHECK_THROWS_AS(legendre_symbol(3, 2), input_error);
    CHECK_THROWS_AS(legendre_symbol(3, 9), input_error);
}

TEST_CASE("legendre_symbol agrees with the square table and is multiplicative") {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        std::set<std::uint64_t> squares;
        for (std::uint64_t a = 1; a < p; ++a) squares.insert(a * a % p);
        for (std::uint64_t a = 1; a < p; ++a) {
            CHECK(legendre_symbol(static_cast<std::int64_t>(a), p) ==
                  (squares.count(a) ? 1 : -1));
            for (std::uint64_t b = 1; b < p; ++b)
                CHECK(legendre_symbol(static_cast<std::int64_t>(a * b), p) ==
                      legendre_symbol(static_cast<std::int64_t>(a), p) *
                          legendre_symbol(static_cast<std::int64_t>(b), p));
        }
    }
}

TEST_CASE("enumeration") {
    SECTION("F_2 yields 0 then 1") {
        auto F2 = build_field(2, 1);
        std::vector<FieldDesc::Coeffs> seen;
        for (const auto& c : enumerate(F2)) seen.push_back(c);
        REQUIRE(seen.size() == 2);
        CHECK(seen[0] == FieldDesc::Coeffs{0});
        CHECK(seen[1] == FieldDesc::Coeffs{1});
    }
    SECTION("F_4 has 4 distinct elements") {
        auto F4 = build_field(2, 2);
        std::set<FieldDesc::Coeffs> seen;
        for (const auto& c : enumerate(F4)) seen.insert(c);
        CHECK(seen.size() == 4);
    }
    SECTION("F_125 has 125 elements") {
        auto F = build_field(5, 3);
        CHECK(enumerate(F).count() == 125);
    }
    SECTION("guard rejects oversized fields") {
        auto F = build_field(2, 41);
        CHECK_THROWS_AS(enumerate(F), input_error);
    }
}

TEST_CASE("element_at matches iteration order") {
    auto F = build_field(3, 2);
    std::uint64_t i = 0;
    for (const auto& c : enumerate(F)) {
        CHECK(F.element_at(i) == c);
        ++i;
    }
}
