// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/poly_json.hpp"
#include "ellcomb/univar_poly.hpp"

using namespace ellcomb;

namespace {

BivarPoly P(const char* text) { return BivarPoly::parse(text); }

BivarPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<int> nterms(0, 6);
    BivarPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        p.add_term(Monomial{static_cast<std::uint32_t>(deg(rng)),
                            static_cast<std::uint32_t>(deg(rng))},
                   coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("addition") {
    CHECK(P("1*q + 1*v") + P("1*q - 1*v") == P("2*q"));
    const BivarPoly p = P("3*q^2*v - 5");
    CHECK(p + BivarPoly() == p);
    // the two low-order slices of N_2
    CHECK(P("2*v + 2*q*v") + P("-1*v^2") == P("-1*v^2 + 2*q*v + 2*v"));
}

TEST_CASE("multiplication") {
    CHECK(P("1 + 1*q") * P("1*v") == P("1*v + 1*q*v"));
    const BivarPoly p = P("7*q*v^3 - 2*q + 1");
    CHECK(p * BivarPoly::constant(1) == p);
    // ECyc_1 * ECyc_2 = N_2
    CHECK(P("1*v") * P("-1*v + 2*q + 2") == P("-1*v^2 + 2*q*v + 2*v"));
}

TEST_CASE("exact division") {
    // N_2 / N_1 = ECyc_2
    CHECK(exact_div(P("-1*v^2 + 2*q*v + 2*v"), P("1*v")) == P("-1*v + 2*q + 2"));
    CHECK_THROWS_AS(exact_div(P("1*q + 1*v"), P("1*v")), NotDivisibleError);
    CHECK_THROWS_AS(exact_div(P("1*q"), BivarPoly()), DivisionByZeroError);
    CHECK(exact_div(BivarPoly(), P("1*q")) == BivarPoly());
    // coefficient obstruction
    CHECK_THROWS_AS(exact_div(P("3*v"), P("2*v")), NotDivisibleError);
}

TEST_CASE("substitute_v") {
    const BivarPoly neg_v = -BivarPoly::variable_v();
    CHECK(P("1*v^2").substitute_v(neg_v) == P("1*v^2"));
    // N_2 with v -> -v, negated, is the wheel polynomial W_2
    CHECK(-P("-1*v^2 + 2*q*v + 2*v").substitute_v(neg_v) == P("1*v^2 + 2*q*v + 2*v"));
    const BivarPoly w2 = P("1*v^2 + 2*q*v + 2*v");
    CHECK(P("1*v").substitute_v(w2) == w2);
}

TEST_CASE("substitute_q_power") {
    CHECK(P("1 + 1*q").substitute_q_power(2) == P("1 + 1*q^2"));
    const BivarPoly n2 = P("-1*v^2 + 2*q*v + 2*v");
    // N_4 = N_2(q^2, N_2)
    const BivarPoly n4 = n2.substitute_q_power(2).substitute_v(n2);
    CHECK(n4 == P("-1*v^4 + 4*q*v^3 + 4*v^3 - 6*q^2*v^2 - 8*q*v^2 - 6*v^2 "
                  "+ 4*q^3*v + 4*q^2*v + 4*q*v + 4*v"));
    const BivarPoly p = P("5*q^3*v - 1*q + 2");
    CHECK(p.substitute_q_power(1) == p);
    CHECK_THROWS_AS(p.substitute_q_power(0), IndexError);
}

TEST_CASE("eval") {
    CHECK(P("1 + 1*q + 1*v").eval(1, 1) == 3);  // L_2(1,1)
    CHECK(P("-1*v^2 + 2*q*v + 2*v").eval(5, 9) == 27);
    CHECK(BivarPoly().eval(12, -7) == 0);
    CHECK(P("-3*q^2*v^3 + 1*q - 4").eval(-2, 3) == -3 * 4 * 27 + (-2) - 4);
}

TEST_CASE("coefficient_of_v") {
    const BivarPoly n5 = P(
        "1*v^5 - 5*q*v^4 - 5*v^4 + 10*q^2*v^3 + 15*q*v^3 + 10*v^3 "
        "- 10*q^3*v^2 - 15*q^2*v^2 - 15*q*v^2 - 10*v^2 "
        "+ 5*q^4*v + 5*q^3*v + 5*q^2*v + 5*q*v + 5*v");
    CHECK(n5.coefficient_of_v(2) ==
          UnivarPoly({BigInt(-10), BigInt(-15), BigInt(-15), BigInt(-10)}));
    CHECK(P("1*v^3 + 1*q*v").coefficient_of_v(5).is_zero());
    CHECK(P("1*v^2 - 2*q*v - 2*v + 2*q^2 + 2").coefficient_of_v(0) ==
          UnivarPoly({BigInt(2), BigInt(0), BigInt(2)}));
}

TEST_CASE("render canonical forms") {
    CHECK(P("1*v").render() == "1*v");
    CHECK(BivarPoly().render() == "0");
    CHECK(P("1*v^2 - 1*q*v - 1*v + 1*q^2 - 1*q + 1").render() ==
          "1*v^2 - 1*q*v - 1*v + 1*q^2 - 1*q + 1");
    CHECK(P("-1*q^3*v^2 + 2*q*v - 5").render() == "-1*q^3*v^2 + 2*q*v - 5");
    CHECK(BivarPoly::monomial(3, 0, 2).render("t") == "3*t^2");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(BivarPoly::parse(""), ParseError);
    CHECK_THROWS_AS(BivarPoly::parse("1*"), ParseError);
    CHECK_THROWS_AS(BivarPoly::parse("1*x"), ParseError);
    CHECK_THROWS_AS(BivarPoly::parse("q^"), ParseError);
    CHECK_THROWS_AS(BivarPoly::parse("2 3"), ParseError);
    try {
        BivarPoly::parse("1*q +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK(BivarPoly::parse("0").is_zero());
    CHECK(BivarPoly::parse("2*q - 2*q").is_zero());
}

TEST_CASE("degrees") {
    CHECK(BivarPoly().deg_q() == -1);
    CHECK(BivarPoly().deg_v() == -1);
    CHECK(P("1*q^3*v + 1*v^2").deg_q() == 3);
    CHECK(P("1*q^3*v + 1*v^2").deg_v() == 2);
}

TEST_CASE("ring laws and round trips on random polynomials") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> small(-9, 9);
    for (int i = 0; i < 1000; ++i) {
        const BivarPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
        CHECK(BivarPoly::parse(a.render()) == a);
        CHECK(from_json_terms(to_json_terms(a)) == a);
        const BigInt q0 = small(rng), v0 = small(rng);
        CHECK((a * b).eval(q0, v0) == a.eval(q0, v0) * b.eval(q0, v0));
        CHECK((a + b).eval(q0, v0) == a.eval(q0, v0) + b.eval(q0, v0));
    }
}

TEST_CASE("big coefficients survive text and json") {
    const char* big = "123456789012345678901234567890123456789012345678901234567890";
    BivarPoly p = BivarPoly::monomial(BigInt(big), 3, 2) - BivarPoly::constant(1);
    CHECK(BivarPoly::parse(p.render()) == p);
    CHECK(from_json_terms(to_json_terms(p)) == p);
    CHECK(p.coefficient(3, 2) == BigInt(big));
}

TEST_CASE("univariate polynomials") {
    const UnivarPoly x = UnivarPoly::x();
    CHECK((x * x - UnivarPoly::constant(1)).render() == "1*x^2 - 1");
    CHECK(UnivarPoly().degree() == -1);
    CHECK(UnivarPoly::constant(4).degree() == 0);
    const UnivarPoly p = x * x + UnivarPoly::monomial(3, 1) - UnivarPoly::constant(2);
    CHECK(p.eval(2) == 4 + 6 - 2);
    CHECK(p.negate_variable().eval(2) == 4 - 6 - 2);
    CHECK(exact_div(p * p, p) == p);
    CHECK_THROWS_AS(exact_div(x, x * x), NotDivisibleError);
    CHECK_THROWS_AS(exact_div(x, UnivarPoly()), DivisionByZeroError);
    // compose: (x^2)(x+1) = x^2 + 2x + 1
    CHECK((x * x).compose(x + UnivarPoly::constant(1)) ==
          UnivarPoly({BigInt(1), BigInt(2), BigInt(1)}));
    CHECK(BivarPoly::from_univar_in_q(p) == BivarPoly::parse("1*q^2 + 3*q - 2"));
}

TEST_CASE("univariate exact division matches bivariate route") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int i = 0; i < 200; ++i) {
        std::vector<BigInt> ca(4), cb(3);
        for (auto& c : ca) c = coeff(rng);
        for (auto& c : cb) c = coeff(rng);
        const UnivarPoly a{ca}, b{cb};
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}
