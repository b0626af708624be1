// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/partitions.hpp"
#include "ellcomb/point_counts.hpp"

using namespace ellcomb;

namespace {
BivarPoly P(const char* text) { return BivarPoly::parse(text); }
}

TEST_CASE("recurrence reproduces the published N_k lines") {
    CHECK(n_k_recurrence(1) == P("1*v"));
    CHECK(n_k_recurrence(2) == P("-1*v^2 + 2*q*v + 2*v"));
    CHECK(n_k_recurrence(4) ==
          P("-1*v^4 + 4*q*v^3 + 4*v^3 - 6*q^2*v^2 - 8*q*v^2 - 6*v^2 "
            "+ 4*q^3*v + 4*q^2*v + 4*q*v + 4*v"));
    CHECK_THROWS_AS(n_k_recurrence(0), IndexError);
}

TEST_CASE("partition sum reproduces the published N_k lines") {
    CHECK(n_k_partition(1) == P("1*v"));
    CHECK(n_k_partition(3) == P("1*v^3 - 3*q*v^2 - 3*v^2 + 3*q^2*v + 3*q*v + 3*v"));
    CHECK(n_k_partition(5) ==
          P("1*v^5 - 5*q*v^4 - 5*v^4 + 10*q^2*v^3 + 15*q*v^3 + 10*v^3 "
            "- 10*q^3*v^2 - 15*q^2*v^2 - 15*q*v^2 - 10*v^2 "
            "+ 5*q^4*v + 5*q^3*v + 5*q^2*v + 5*q*v + 5*v"));
}

TEST_CASE("P_{i,k} coefficients") {
    CHECK(p_ik(2, 4) == UnivarPoly({BigInt(6), BigInt(8), BigInt(6)}));
    CHECK(p_ik(1, 5) ==
          UnivarPoly({BigInt(5), BigInt(5), BigInt(5), BigInt(5), BigInt(5)}));
    for (unsigned k = 1; k <= 12; ++k) CHECK(p_ik(k, k) == UnivarPoly::constant(1));
    CHECK_THROWS_AS(p_ik(0, 4), IndexError);
    CHECK_THROWS_AS(p_ik(5, 4), IndexError);
}

TEST_CASE("binomial closed forms") {
    CHECK(n_k_binomial(3) == n_k_recurrence(3));
    CHECK(e_k_binomial(2) == P("1*v^2 - 1*q*v - 1*v"));
    CHECK(e_k_binomial(5) ==
          P("1*v^5 - 4*q*v^4 - 4*v^4 + 6*q^2*v^3 + 9*q*v^3 + 6*v^3 "
            "- 4*q^3*v^2 - 6*q^2*v^2 - 6*q*v^2 - 4*v^2 "
            "+ 1*q^4*v + 1*q^3*v + 1*q^2*v + 1*q*v + 1*v"));
}

TEST_CASE("H_k") {
    CHECK(h_k(0) == BivarPoly::constant(1));
    CHECK(h_k(1) == P("1*v"));
    CHECK(h_k(3) == P("1*q^2*v + 1*q*v + 1*v"));
}

TEST_CASE("E_k recurrence matches the published lines") {
    CHECK(e_k_recurrence(0) == BivarPoly::constant(1));
    CHECK(e_k_recurrence(3) == P("1*v^3 - 2*q*v^2 - 2*v^2 + 1*q^2*v + 1*q*v + 1*v"));
    CHECK(e_k_recurrence(4) ==
          P("1*v^4 - 3*q*v^3 - 3*v^3 + 3*q^2*v^2 + 4*q*v^2 + 3*v^2 "
            "- 1*q^3*v - 1*q^2*v - 1*q*v - 1*v"));
}

TEST_CASE("E_k from the P_{i,k} family") {
    CHECK(e_k_from_pik(1) == P("1*v"));
    CHECK(e_k_from_pik(2) == e_k_recurrence(2));
    CHECK(e_k_from_pik(5) == e_k_recurrence(5));
}

TEST_CASE("method agreement to k = 30") {
    for (unsigned k = 1; k <= 30; ++k) {
        const BivarPoly n = n_k_recurrence(k);
        CHECK(n == n_k_partition(k));
        CHECK(n == n_k_binomial(k));
        const BivarPoly e = e_k_recurrence(k);
        CHECK(e == e_k_binomial(k));
        CHECK(e == e_k_from_pik(k));
    }
}

TEST_CASE("sign alternation of the N_k coefficients to k = 30") {
    for (unsigned k = 1; k <= 30; ++k) {
        const BivarPoly n = n_k_recurrence(k);
        for (unsigned i = 1; i <= k; ++i) {
            UnivarPoly c = n.coefficient_of_v(i);
            if (i % 2 == 0) c = -c;
            REQUIRE(!c.is_zero());
            for (const BigInt& x : c.coeffs()) REQUIRE(x >= 0);
            bool any_positive = false;
            for (const BigInt& x : c.coeffs()) any_positive |= (x > 0);
            REQUIRE(any_positive);
        }
    }
}

TEST_CASE("v E_n = E_{n+1} + (1+q) E_n + q E_{n-1}") {
    const BivarPoly v = BivarPoly::variable_v();
    const BivarPoly one_q = P("1 + 1*q");
    for (unsigned n = 2; n <= 20; ++n) {
        CHECK(v * e_k_recurrence(n) ==
              e_k_recurrence(n + 1) + one_q * e_k_recurrence(n) +
                  BivarPoly::variable_q() * e_k_recurrence(n - 1));
    }
}

TEST_CASE("h/e duality: alternating convolution vanishes") {
    for (unsigned k = 1; k <= 20; ++k) {
        BivarPoly sum;
        for (unsigned a = 0; a <= k; ++a) {
            BivarPoly term = e_k_recurrence(a) * h_k(k - a);
            if (a % 2 == 1) term = -term;
            sum += term;
        }
        CHECK(sum.is_zero());
    }
    // k = 0 term of the product is 1
    CHECK(e_k_recurrence(0) * h_k(0) == BivarPoly::constant(1));
}

TEST_CASE("N_{mk} composes through q -> q^k, v -> N_k") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned k = 1; k <= 5; ++k)
            CHECK(n_k_recurrence(m).substitute_q_power(k).substitute_v(n_k_recurrence(k)) ==
                  n_k_recurrence(m * k));
}

TEST_CASE("ZetaFamily conventions") {
    CHECK(zeta_family().n_k(0).is_zero());
    CHECK(zeta_family().g_k(0) == BivarPoly::constant(2));
    for (unsigned k = 0; k <= 25; ++k) {
        BivarPoly sum = zeta_family().g_k(k) + zeta_family().n_k(k);
        BivarPoly expect = BivarPoly::constant(1) + BivarPoly::monomial(1, k, 0);
        CHECK(sum == expect);
    }
}

TEST_CASE("partition enumeration order and prefactors") {
    std::vector<std::vector<unsigned>> seen;
    for_each_partition(6, [&](const Partition& lam) { seen.push_back(lam.parts); });
    CHECK(seen.size() == 11);  // p(6)
    CHECK(seen.front() == std::vector<unsigned>{6});
    CHECK(seen.back() == std::vector<unsigned>{1, 1, 1, 1, 1, 1});
    CHECK(seen[1] == std::vector<unsigned>{5, 1});
    // reverse-lexicographic: each successor is strictly smaller
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] > seen[i]);

    // k / l * multinomial stays integral across all partitions of 1..12
    for (unsigned n = 1; n <= 12; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            CHECK(arrangement_count(n, lam) > 0);
        });

    Partition lam;
    lam.parts = {2, 2, 1};
    CHECK(lam.sum() == 5);
    CHECK(lam.length() == 3);
    CHECK(lam.multiplicities() == std::vector<unsigned>{1, 2});
    // 5/3 * 3!/(1!2!) = 5
    CHECK(arrangement_count(5, lam) == 5);
}
