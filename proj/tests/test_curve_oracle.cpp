// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellcomb/curve_oracle.hpp"
#include "ellcomb/cyclotomic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/point_counts.hpp"

using namespace ellcomb;

TEST_CASE("find_irreducible is deterministic and canonical") {
    CHECK(find_irreducible(5, 1) == std::vector<std::uint32_t>{0, 1});            // x
    CHECK(find_irreducible(5, 2) == std::vector<std::uint32_t>{2, 0, 1});         // x^2 + 2
    CHECK(find_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});      // x^3 + x + 1
    CHECK(find_irreducible(5, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(find_irreducible(7, 3) == std::vector<std::uint32_t>{2, 0, 0, 1});      // x^3 + 2
    CHECK_THROWS_AS(find_irreducible(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_irreducible(5, 10), SizeLimitError);
}

TEST_CASE("extension field arithmetic") {
    const ExtField f(5, 2);
    CHECK(f.order() == 25);
    CHECK(f.modulus() == std::vector<std::uint32_t>{2, 0, 1});
    // every nonzero element has multiplicative order dividing 24
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint64_t> pick(1, 24);
    for (int i = 0; i < 20; ++i) {
        const auto a = f.element_at(pick(rng));
        CHECK(f.pow(a, f.order() - 1) == f.one());
        CHECK(f.mul(a, f.inverse(a)) == f.one());
    }
    CHECK_THROWS_AS(f.inverse(f.zero()), DivisionByZeroError);
    // index round trip
    for (std::uint64_t i = 0; i < 25; ++i) CHECK(f.index_of(f.element_at(i)) == i);
    CHECK(f.render(f.element_at(7)) == "[2,1]");

    const ExtField f73(7, 3);
    CHECK(f73.order() == 343);
    const auto g = f73.element_at(9);
    CHECK(f73.pow(g, 342) == f73.one());
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(make_curve(4, 1, 1), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(make_curve(3, 1, 1), std::invalid_argument);   // p < 5
    CHECK_THROWS_AS(make_curve(5, 0, 0), std::invalid_argument);   // singular
    CHECK_THROWS_AS(make_curve(7, 1, 2), std::invalid_argument);   // 4 + 27*4 = 112 = 0 mod 7
    CHECK_NOTHROW(make_curve(5, 1, 1));
    CHECK_NOTHROW(parse_curve_spec("5,1,1"));
    CHECK_THROWS_AS(parse_curve_spec("5,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("5,1,1,9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("5,a,1"), std::invalid_argument);
}

TEST_CASE("point counting by sweep") {
    const Curve c = make_curve(5, 1, 1);
    CHECK(count_points(c, 1) == 9);
    CHECK(count_points(c, 2) == 27);
    CHECK(count_points(make_curve(5, 4, 0), 1) == 8);  // y^2 = x^3 - x
    CHECK_THROWS_AS(count_points(c, 6), SizeLimitError);
}

TEST_CASE("predictions agree with independent sweeps") {
    CHECK(predict_nk(5, 9, 2) == 27);
    for (unsigned k = 1; k <= 4; ++k) CHECK(predict_nk(11, 0, k) == 0);
    const Curve c7 = make_curve(7, 0, 2);
    const std::uint64_t n1 = count_points(c7, 1);
    CHECK(n1 == 9);
    CHECK(predict_nk(7, BigInt(static_cast<unsigned long>(n1)), 3) ==
          BigInt(static_cast<unsigned long>(count_points(c7, 3))));
}

TEST_CASE("group law") {
    const Curve c = make_curve(5, 1, 1);
    const ExtField f(5, 2);
    const auto points = enumerate_points(c, f);
    CHECK(points.size() == 27);
    for (const auto& pt : points) CHECK(on_curve(pt, c, f));

    const CurvePoint inf = CurvePoint::at_infinity();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const CurvePoint &P = points[pick(rng)], &Q = points[pick(rng)], &R = points[pick(rng)];
        CHECK(points_equal(point_add(P, inf, c, f), P));
        CHECK(points_equal(point_add(P, point_negate(P, f), c, f), inf));
        CHECK(points_equal(point_add(point_add(P, Q, c, f), R, c, f),
                           point_add(P, point_add(Q, R, c, f), c, f)));
        CHECK(points_equal(point_add(P, Q, c, f), point_add(Q, P, c, f)));
        CHECK(on_curve(point_add(P, Q, c, f), c, f));
        const BigInt m = static_cast<long>(i % 9) - 4, n = static_cast<long>(i % 7) - 3;
        CHECK(points_equal(scalar_mul(m + n, P, c, f),
                           point_add(scalar_mul(m, P, c, f), scalar_mul(n, P, c, f), c, f)));
    }

    // Lagrange: the group order kills every point
    const BigInt order(static_cast<unsigned long>(points.size()));
    for (const auto& pt : points) CHECK(scalar_mul(order, pt, c, f).infinity);

    // field mismatch is detected
    const ExtField f3(5, 3);
    const auto pts3 = enumerate_points(c, f3);
    CHECK_THROWS_AS(point_add(points[1], pts3[1], c, f), FieldMismatchError);
}

TEST_CASE("frobenius") {
    const Curve c = make_curve(5, 1, 1);
    const ExtField base(5, 1);
    for (const auto& pt : enumerate_points(c, base)) {
        const CurvePoint lifted =
            pt.infinity ? pt : make_point(base, pt.x, pt.y);
        CHECK(points_equal(frobenius(lifted, base), lifted));
    }
    const ExtField ext(5, 2);
    const auto points = enumerate_points(c, ext);
    std::size_t fixed = 0;
    for (const auto& pt : points) {
        const CurvePoint image = frobenius(pt, ext);
        CHECK(on_curve(image, c, ext));
        // pi^2 is the identity on F_25-points
        CHECK(points_equal(frobenius(image, ext), pt));
        if (points_equal(image, pt)) ++fixed;
    }
    CHECK(fixed == count_points(c, 1));
}

TEST_CASE("kernel counts of Cyc_d(pi)") {
    const Curve c = make_curve(5, 1, 1);
    const BigInt n1(static_cast<unsigned long>(count_points(c, 1)));
    CHECK(endo_kernel_count(c, 1) == 9);  // Ker(1 - pi) = C(F_q)
    CHECK(endo_kernel_count(c, 2) == 3);  // ECyc_2(5,9) = N_2/N_1 = 27/9
    CHECK(BigInt(static_cast<unsigned long>(endo_kernel_count(c, 3))) ==
          ecyc_d(3).eval(5, n1));
    CHECK(BigInt(static_cast<unsigned long>(endo_kernel_count(c, 4))) ==
          ecyc_d(4).eval(5, n1));
    // product over divisors recovers the full point counts
    for (unsigned k = 1; k <= 4; ++k) {
        std::uint64_t prod = 1;
        for (unsigned d : divisors(k)) prod *= endo_kernel_count(c, d);
        CHECK(prod == count_points(c, k));
    }
}

TEST_CASE("battery-wide oracle agreement and Hasse bound") {
    const auto battery = standard_curve_battery();
    CHECK(battery.size() >= 12);
    for (const Curve& c : battery) {
        const std::uint64_t n1 = count_points(c, 1);
        CHECK(hasse_bound_holds(c, n1));
        std::uint64_t pk = c.p;
        for (unsigned k = 1; pk <= 3000; ++k, pk *= c.p) {
            CHECK(BigInt(static_cast<unsigned long>(count_points(c, k))) ==
                  predict_nk(c.p, BigInt(static_cast<unsigned long>(n1)), k));
        }
    }
}

TEST_CASE("base field embeds into extensions compatibly") {
    const Curve c = make_curve(7, 1, 1);
    const ExtField base(7, 1);
    const ExtField ext(7, 2);
    const auto pts = enumerate_points(c, base);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].infinity) continue;
        const CurvePoint lifted = make_point(ext, ext.from_base(pts[i].x[0]), ext.from_base(pts[i].y[0]));
        CHECK(on_curve(lifted, c, ext));
        for (std::size_t j = i; j < std::min(pts.size(), i + 3); ++j) {
            if (pts[j].infinity) continue;
            const CurvePoint lifted_j =
                make_point(ext, ext.from_base(pts[j].x[0]), ext.from_base(pts[j].y[0]));
            const CurvePoint sum_base = point_add(pts[i], pts[j], c, base);
            const CurvePoint sum_ext = point_add(lifted, lifted_j, c, ext);
            if (sum_base.infinity) {
                CHECK(sum_ext.infinity);
            } else {
                CHECK(points_equal(sum_ext, make_point(ext, ext.from_base(sum_base.x[0]),
                                                       ext.from_base(sum_base.y[0]))));
            }
        }
    }
}
