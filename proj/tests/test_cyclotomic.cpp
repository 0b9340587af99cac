#include "sszeta/cyclotomic.hpp"

#include "sszeta/cyclo_suite.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace sszeta;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ZPoly{Int(-1), Int(1)});                          // x - 1
    CHECK(cyclotomic_poly(8) == ZPoly{Int(1), Int(0), Int(0), Int(0), Int(1)});   // x^4 + 1
    CHECK(cyclotomic_poly(12) == ZPoly{Int(1), Int(0), Int(-1), Int(0), Int(1)}); // x^4 - x^2 + 1
}

TEST_CASE("product of Phi_d over divisors is x^n - 1") {
    for (unsigned n = 1; n <= 48; ++n) {
        ZPoly prod{Int(1)};
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = detail::zmul(prod, cyclotomic_poly(d));
        ZPoly expect(n + 1, Int(0));
        expect[0] = -1;
        expect[n] = 1;
        CAPTURE(n);
        CHECK(prod == expect);
    }
}

TEST_CASE("cyclotomic element arithmetic") {
    SECTION("w^n = 1") {
        for (unsigned n : {1u, 5u, 8u, 12u, 45u})
            CHECK(CycloElement::root_power(n, n) == CycloElement::rational(n, Rat(1)));
    }
    SECTION("distributivity on random elements of Q(w_12)") {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(-9, 9);
        auto random_element = [&] {
            std::vector<Rat> c;
            for (int i = 0; i < 4; ++i) c.emplace_back(Rat(pick(rng), 1 + std::abs(pick(rng))));
            return CycloElement(12, c);
        };
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_element(), b = random_element(), c = random_element();
            CHECK((a + b) * c == a * c + b * c);
        }
    }
    SECTION("substitution is multiplicative") {
        auto a = CycloElement::root_power(12, 1) + CycloElement::rational(12, Rat(2));
        auto b = CycloElement::root_power(12, 5) - CycloElement::rational(12, Rat(1, 3));
        for (std::uint64_t k : {5u, 7u, 11u})
            CHECK((a * b).substituted(k) == a.substituted(k) * b.substituted(k));
    }
}

TEST_CASE("index sets") {
    SECTION("(8, 2) splits by k mod 8") {
        auto sets = index_sets(8, 2);
        CHECK(sets.plus == std::vector<std::uint64_t>{1, 7});
        CHECK(sets.minus == std::vector<std::uint64_t>{3, 5});
    }
    SECTION("(5, 5) splits by squares mod 5") {
        auto sets = index_sets(5, 5);
        CHECK(sets.plus == std::vector<std::uint64_t>{1, 4});
        CHECK(sets.minus == std::vector<std::uint64_t>{2, 3});
    }
    SECTION("(12, 3) splits the four units into two pairs") {
        auto sets = index_sets(12, 3);
        CHECK(sets.plus == std::vector<std::uint64_t>{1, 11});
        CHECK(sets.minus == std::vector<std::uint64_t>{5, 7});
    }
    SECTION("membership is a precondition") {
        CHECK_THROWS_AS(index_sets(7, 5), input_error);
    }
}

TEST_CASE("sqrt_p_embed") {
    SECTION("sqrt(5) in Q(w_10) via the Gauss sum") {
        auto e = sqrt_p_embed(10, 5);
        REQUIRE(e.has_value());
        CycloElement expect = CycloElement::root_power(10, 2) - CycloElement::root_power(10, 4) -
                              CycloElement::root_power(10, 6) + CycloElement::root_power(10, 8);
        CHECK(*e == expect);
        CHECK(*e * *e == CycloElement::rational(10, Rat(5)));
    }
    SECTION("sqrt(2) = w8 - w8^3") {
        auto e = sqrt_p_embed(8, 2);
        REQUIRE(e.has_value());
        CHECK(e->coeffs() == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(-1)});
    }
    SECTION("sqrt(3) needs conductor divisible by 12") {
        CHECK(sqrt_p_embed(12, 3).has_value());
        CHECK_FALSE(sqrt_p_embed(6, 3).has_value());
    }
    SECTION("not a member when p does not divide n") {
        CHECK_FALSE(sqrt_p_embed(3, 5).has_value());
    }
}

TEST_CASE("nonmembership certificates") {
    CHECK(nonmembership_certificate(3, 5) == 7);
    CHECK(nonmembership_certificate(4, 3) == 5);
    CHECK(nonmembership_certificate(8, 3) == 17);
    CHECK_THROWS_AS(nonmembership_certificate(10, 5), input_error);  // member
}

TEST_CASE("quad_project") {
    SECTION("the embedded sqrt(2) projects to (0, 1)") {
        auto e = *sqrt_p_embed(8, 2);
        auto q = quad_project(e, 2);
        CHECK(q.a == 0);
        CHECK(q.b == 1);
    }
    SECTION("rational constants project to (c, 0)") {
        auto q = quad_project(CycloElement::rational(12, Rat(3)), 3);
        CHECK(q.a == 3);
        CHECK(q.b == 0);
    }
    SECTION("w_5 is not in the quadratic subfield") {
        CHECK_THROWS_AS(quad_project(CycloElement::root_power(5, 1), 5), math_error);
    }
}

TEST_CASE("phi_split") {
    SECTION("(8, 2): x^2 -+ sqrt(2) x + 1") {
        auto [plus, minus] = phi_split(8, 2);
        REQUIRE(plus.size() == 3);
        REQUIRE(minus.size() == 3);
        CHECK(plus[0] == QuadElement{2, Rat(1), Rat(0)});
        CHECK(plus[1] == QuadElement{2, Rat(0), Rat(-1)});
        CHECK(plus[2] == QuadElement{2, Rat(1), Rat(0)});
        CHECK(minus[1] == QuadElement{2, Rat(0), Rat(1)});
    }
    SECTION("(5, 5): constant terms 1, linear terms (1 -+ sqrt 5)/2") {
        auto [plus, minus] = phi_split(5, 5);
        REQUIRE(plus.size() == 3);
        CHECK(plus[0] == QuadElement{5, Rat(1), Rat(0)});
        CHECK(plus[1] == QuadElement{5, Rat(1, 2), Rat(-1, 2)});
        CHECK(minus[1] == QuadElement{5, Rat(1, 2), Rat(1, 2)});
    }
    SECTION("(12, 3): x^2 -+ sqrt(3) x + 1") {
        auto [plus, minus] = phi_split(12, 3);
        REQUIRE(plus.size() == 3);
        CHECK(plus[1] == QuadElement{3, Rat(0), Rat(-1)});
        CHECK(minus[1] == QuadElement{3, Rat(0), Rat(1)});
    }
}

TEST_CASE("power_sum_pm") {
    SECTION("(8, 2, 1) gives +-sqrt(2)") {
        auto [plus, minus] = power_sum_pm(8, 2, 1);
        CHECK(plus == QuadElement{2, Rat(0), Rat(1)});
        CHECK(minus == QuadElement{2, Rat(0), Rat(-1)});
    }
    SECTION("l = 0 sums to phi(n)/2 on both sides") {
        auto [plus, minus] = power_sum_pm(8, 2, 0);
        CHECK(plus == QuadElement{2, Rat(2), Rat(0)});
        CHECK(minus == QuadElement{2, Rat(2), Rat(0)});
    }
    SECTION("(5, 5, 1) has rational part -1/2") {
        auto [plus, minus] = power_sum_pm(5, 5, 1);
        CHECK(plus == QuadElement{5, Rat(-1, 2), Rat(1, 2)});
        CHECK(minus == QuadElement{5, Rat(-1, 2), Rat(-1, 2)});
    }
    SECTION("negative exponents reduce mod n") {
        auto a = power_sum_pm(12, 3, -1);
        auto b = power_sum_pm(12, 3, 11);
        CHECK(a.first == b.first);
        CHECK(a.second == b.second);
    }
}

TEST_CASE("gauss sums") {
    SECTION("p = 3: w - w^2 = 1 + 2w") {
        auto g = gauss_sum(3);
        CHECK(g.coeffs() == std::vector<Rat>{Rat(1), Rat(2)});
        CHECK(g * g == CycloElement::rational(3, Rat(-3)));
    }
    SECTION("squares are p* for p up to 13") {
        for (std::uint64_t p : {3, 5, 7, 11, 13}) {
            auto g = gauss_sum(p);  // internal verification
            const Int p_star = p % 4 == 1 ? Int(p) : -Int(p);
            CHECK(g * g == CycloElement::rational(static_cast<unsigned>(p), Rat(p_star)));
        }
    }
}

TEST_CASE("Galois action fixes or negates the embedded root") {
    for (auto [n, p] : std::vector<std::pair<unsigned, std::uint64_t>>{
             {8, 2}, {16, 2}, {5, 5}, {10, 5}, {12, 3}, {28, 7}, {13, 13}}) {
        auto sets = index_sets(n, p);
        auto e = *sqrt_p_embed(n, p);
        for (std::uint64_t k : sets.plus) CHECK(e.substituted(k) == e);
        for (std::uint64_t k : sets.minus) CHECK(e.substituted(k) == -e);
    }
}

TEST_CASE("power sums are conjugate for every l up to n") {
    // power_sum_pm verifies the conjugacy internally and throws on failure
    for (std::uint64_t p : {2, 3, 5, 7, 13}) {
        for (unsigned n = 1; n <= 48; ++n) {
            if (!sqrt_p_member(n, p)) continue;
            for (unsigned l = 0; l <= n; ++l) {
                CHECK_NOTHROW(power_sum_pm(n, p, static_cast<std::int64_t>(l)));
            }
        }
    }
}

TEST_CASE("full verification sweep up to n = 48") {
    auto report = cyclo_suite(48, {2, 3, 5, 7, 13});
    for (const auto& f : report.failures) UNSCOPED_INFO(f);
    CHECK(report.pass());
    CHECK_FALSE(report.checked.empty());
}
