#include "sszeta/lpoly.hpp"

#include "sszeta/curve.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

using namespace sszeta;

namespace {

// 1 - 10T^2 - 75T^4 + 1000T^6 + 1250T^8 - 37500T^10 + 31250T^12
//   + 625000T^14 - 1171875T^16 - 3906250T^18 + 9765625T^20
std::vector<Int> golden_coeffs() {
    return {Int(1),       Int(0), Int(-10),      Int(0), Int(-75),      Int(0), Int(1000),
            Int(0),       Int(1250),     Int(0), Int(-37500),   Int(0), Int(31250),
            Int(0),       Int(625000),   Int(0), Int(-1171875), Int(0), Int(-3906250),
            Int(0),       Int(9765625)};
}

std::vector<Int> golden_traces() {
    return {Int(0), Int(-20), Int(0), Int(-500), Int(0),
            Int(-500), Int(0), Int(-12500), Int(0), Int(-12500)};
}

}  // namespace

TEST_CASE("construction validates the invariants") {
    CHECK_THROWS_AS(make_lpolynomial(5, 1, 1, {Int(2), Int(0), Int(5)}), input_error);  // c0
    CHECK_THROWS_AS(make_lpolynomial(5, 1, 1, {Int(1), Int(0), Int(7)}), math_error);   // c2 != q
    CHECK_THROWS_AS(make_lpolynomial(5, 1, 0, {Int(1)}), input_error);
    CHECK_THROWS_AS(make_lpolynomial(5, 1, 2, {Int(1), Int(0), Int(5)}), input_error);  // size
    CHECK_NOTHROW(make_lpolynomial(5, 1, 1, {Int(1), Int(0), Int(5)}));
}

TEST_CASE("coeffs_from_traces reproduces the genus-10 polynomial") {
    auto L = coeffs_from_traces(5, 1, 10, golden_traces());
    CHECK(L.coeffs == golden_coeffs());
}

TEST_CASE("coeffs_from_traces with zero drivers") {
    auto L = coeffs_from_traces(3, 1, 2, {Int(0), Int(0)});
    CHECK(L.coeffs == std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(9)});
}

TEST_CASE("coeffs_from_traces on the F_2 fixture count") {
    auto L = coeffs_from_traces(2, 1, 1, {Int(2)});
    CHECK(L.coeffs == std::vector<Int>{Int(1), Int(2), Int(2)});
}

TEST_CASE("coeffs_from_traces reports divisibility failures") {
    CHECK_THROWS_WITH(coeffs_from_traces(5, 1, 2, {Int(1), Int(0)}),
                      Catch::Matchers::ContainsSubstring("2*c_2"));
}

TEST_CASE("traces_from_coeffs inverts the recursion") {
    SECTION("golden polynomial") {
        auto L = make_lpolynomial(5, 1, 10, golden_coeffs());
        auto seq = traces_from_coeffs(L, 10);
        auto expect = golden_traces();
        for (unsigned n = 1; n <= 10; ++n) CHECK(seq.at(n) == expect[n - 1]);
    }
    SECTION("supersingular elliptic curve over F_7") {
        // reciprocal roots +-i sqrt(7): P_2 = -14, P_4 = 98
        auto L = make_lpolynomial(7, 1, 1, {Int(1), Int(0), Int(7)});
        auto seq = traces_from_coeffs(L, 4);
        CHECK(seq.at(1) == 0);
        CHECK(seq.at(2) == 14);
        CHECK(seq.at(3) == 0);
        CHECK(seq.at(4) == -98);
    }
    SECTION("N = 0") {
        auto L = make_lpolynomial(2, 1, 1, {Int(1), Int(2), Int(2)});
        CHECK(traces_from_coeffs(L, 0).values.empty());
    }
}

TEST_CASE("roundtrip property on pseudorandom polynomials") {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::uniform_int_distribution<int> genus_pick(1, 8);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned g = genus_pick(rng);
        const std::uint64_t p = primes[rng() % 6];
        const unsigned r = 1 + rng() % 2;
        const Int q = ipow(Int(p), r);
        std::vector<Int> c(2 * g + 1, Int(0));
        c[0] = 1;
        for (unsigned i = 1; i <= g; ++i) c[i] = coeff(rng);
        for (unsigned i = 0; i < g; ++i) c[2 * g - i] = ipow(q, g - i) * c[i];
        auto L = make_lpolynomial(p, r, g, c);
        auto seq = traces_from_coeffs(L, g);
        std::vector<Int> S;
        for (unsigned n = 1; n <= g; ++n) S.push_back(seq.at(n));
        auto back = coeffs_from_traces(p, r, g, S);
        REQUIRE(back.coeffs == c);
    }
}

TEST_CASE("brute-force counts and the Newton recursion are self-consistent") {
    auto C = make_curve_spec(CurveKind::artin_schreier, 2, 1, {Int(0), Int(1), Int(0), Int(1)});
    auto S1 = trace_number(C, 1);
    auto L = coeffs_from_traces(2, 1, 1, {S1});
    auto seq = traces_from_coeffs(L, 3);
    auto brute = trace_sequence(C, 3);
    for (unsigned n = 1; n <= 3; ++n) CHECK(seq.at(n) == brute.at(n));
}

TEST_CASE("is_supersingular verdicts") {
    SECTION("golden polynomial passes") {
        auto L = make_lpolynomial(5, 1, 10, golden_coeffs());
        CHECK(is_supersingular(L).pass);
    }
    SECTION("ordinary elliptic polynomial fails at i = 1") {
        auto L = make_lpolynomial(5, 1, 1, {Int(1), Int(-1), Int(5)});
        auto report = is_supersingular(L);
        REQUIRE_FALSE(report.pass);
        REQUIRE(report.failures.size() == 1);
        CHECK(report.failures[0].i == 1);
        CHECK(report.failures[0].ord == 0);
        CHECK(report.failures[0].twice_min == 1);
    }
    SECTION("minimal (1 - 5T)^2 over F_25 passes") {
        auto L = make_lpolynomial(5, 2, 1, {Int(1), Int(-10), Int(25)});
        CHECK(is_supersingular(L).pass);
    }
}

TEST_CASE("is_supersingular survives base-extension simulation") {
    auto check_squared = [](const LPolynomial& L) {
        auto seq = traces_from_coeffs(L, 2 * L.g);
        std::vector<Int> S2;
        for (unsigned n = 1; n <= L.g; ++n) S2.push_back(seq.at(2 * n));
        auto squared = coeffs_from_traces(L.p, 2 * L.r, L.g, S2);
        CHECK(is_supersingular(squared).pass);
    };
    check_squared(make_lpolynomial(5, 1, 10, golden_coeffs()));
    check_squared(make_lpolynomial(2, 1, 1, {Int(1), Int(2), Int(2)}));
    check_squared(make_lpolynomial(7, 1, 1, {Int(1), Int(0), Int(7)}));
}

TEST_CASE("detect_period") {
    SECTION("golden polynomial has period 4") {
        auto L = make_lpolynomial(5, 1, 10, golden_coeffs());
        auto info = detect_period(L);
        CHECK(info.s == 4);
        CHECK(info.minimal_at == 4);
    }
    SECTION("F_2 fixture has period 8") {
        auto L = make_lpolynomial(2, 1, 1, {Int(1), Int(2), Int(2)});
        CHECK(detect_period(L).s == 8);
    }
    SECTION("minimal polynomial over F_p^2 has period 1") {
        // (1 - 5T)^4 over F_25
        auto L = make_lpolynomial(5, 2, 2, {Int(1), Int(-20), Int(150), Int(-500), Int(625)});
        CHECK(detect_period(L).s == 1);
    }
    SECTION("multiples of the period are minimal as well") {
        auto L = make_lpolynomial(2, 1, 1, {Int(1), Int(2), Int(2)});
        const unsigned s = detect_period(L).s;
        auto seq = traces_from_coeffs(L, 2 * s);
        for (unsigned k = 1; k <= 2; ++k) {
            Int minimal = Int(-2) * Int(L.g) * ipow(Int(L.p), std::uint64_t(k) * s * L.r / 2);
            CHECK(seq.at(k * s) == minimal);
        }
    }
    SECTION("requires a supersingular input") {
        auto L = make_lpolynomial(5, 1, 1, {Int(1), Int(-1), Int(5)});
        CHECK_THROWS_AS(detect_period(L), math_error);
    }
    SECTION("reports the bound when nothing is found") {
        auto L = make_lpolynomial(2, 1, 1, {Int(1), Int(2), Int(2)});
        CHECK_THROWS_WITH(detect_period(L, 4),
                          Catch::Matchers::ContainsSubstring("candidates"));
    }
}

TEST_CASE("period_candidates") {
    auto oracle_phi = [](unsigned s) {
        unsigned count = 0;
        for (unsigned k = 1; k <= s; ++k)
            if (std::gcd(k, s) == 1) ++count;
        return count;
    };
    SECTION("g = 1 list") {
        CHECK(period_candidates(1) == std::vector<unsigned>{3, 4, 5, 6, 8, 10, 12});
    }
    SECTION("g = 10 contains the phi = 20 solutions") {
        auto list = period_candidates(10);
        for (unsigned v : {25u, 33u, 50u})
            CHECK(std::find(list.begin(), list.end(), v) != list.end());
        for (unsigned s : list) {
            auto phi = oracle_phi(s);
            CHECK((phi == 20 || phi == 40));
        }
        // nothing missed below the scan bound
        for (unsigned s = 1; s <= 2 * 40 * 40; ++s) {
            auto phi = oracle_phi(s);
            if (phi == 20 || phi == 40)
                CHECK(std::find(list.begin(), list.end(), s) != list.end());
        }
    }
    SECTION("nonempty for g = 1") {
        CHECK_FALSE(period_candidates(1).empty());
    }
}
