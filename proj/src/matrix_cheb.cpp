// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/matrix_cheb.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "ellcomb/errors.hpp"
#include "ellcomb/point_counts.hpp"

namespace ellcomb {

namespace {

BivarPoly diag_entry() {
    // 1 + q - v
    BivarPoly p = BivarPoly::constant(1);
    p += BivarPoly::variable_q();
    p -= BivarPoly::variable_v();
    return p;
}

}  // namespace

PolyMatrix::PolyMatrix(unsigned dim) : dim_(dim), entries_(std::size_t(dim) * dim) {}

PolyMatrix PolyMatrix::identity(unsigned dim) {
    PolyMatrix m(dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = BivarPoly::constant(1);
    return m;
}

PolyMatrix build_mk(unsigned k) {
    if (k < 1) throw IndexError("build_mk: k must be >= 1");
    PolyMatrix m(k);
    if (k == 1) {
        m.at(0, 0) = -BivarPoly::variable_v();
        return m;
    }
    if (k == 2) {
        BivarPoly off = -(BivarPoly::constant(1) + BivarPoly::variable_q());
        m.at(0, 0) = m.at(1, 1) = diag_entry();
        m.at(0, 1) = m.at(1, 0) = off;
        return m;
    }
    const BivarPoly d = diag_entry();
    const BivarPoly super = BivarPoly::constant(-1);
    const BivarPoly sub = -BivarPoly::variable_q();
    for (unsigned i = 0; i < k; ++i) {
        m.at(i, i) = d;
        m.at(i, (i + 1) % k) = super;
        m.at(i, (i + k - 1) % k) = sub;
    }
    return m;
}

PolyMatrix build_mk_prime(unsigned k) {
    if (k < 1) throw IndexError("build_mk_prime: k must be >= 1");
    PolyMatrix m(k);
    const BivarPoly d = diag_entry();
    for (unsigned i = 0; i < k; ++i) {
        m.at(i, i) = d;
        if (i + 1 < k) {
            BivarPoly super = -BivarPoly::variable_q();
            if (i == 0) super += super;  // first superdiagonal entry is -2q
            m.at(i, i + 1) = super;
            m.at(i + 1, i) = BivarPoly::constant(-1);
        }
    }
    return m;
}

BivarPoly det_poly(const PolyMatrix& m) {
    const unsigned n = m.dim();
    if (n == 0) return BivarPoly::constant(1);
    PolyMatrix a = m;
    int sign = 1;
    BivarPoly prev = BivarPoly::constant(1);
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            unsigned r = k + 1;
            while (r < n && a.at(r, k).is_zero()) ++r;
            if (r == n) return {};  // zero column below the pivot: det = 0
            for (unsigned j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                BivarPoly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = exact_div(num, prev);
            }
            a.at(i, k) = BivarPoly();
        }
        prev = a.at(k, k);
    }
    BivarPoly det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

UnivarPoly chebyshev_t(unsigned k) {
    UnivarPoly prev = UnivarPoly::constant(1);
    if (k == 0) return prev;
    UnivarPoly cur = UnivarPoly::x();
    const UnivarPoly two_x = UnivarPoly::monomial(2, 1);
    for (unsigned i = 1; i < k; ++i) {
        UnivarPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool cheb_identity_check(unsigned k) {
    if (k < 1) throw IndexError("cheb_identity_check: k must be >= 1");
    // Work in Z[u,v] with q = u^2; the q-slot of BivarPoly holds u here.
    // P_j = (2u)^j T_j((1+u^2-v)/(2u)) satisfies
    //   P_{j+1} = 2(1+u^2-v) P_j - 4u^2 P_{j-1},  P_0 = 1,  P_1 = 1+u^2-v,
    // and the identity to verify becomes 2^{k-1} G_k(u^2, v) = P_k.
    BivarPoly arg = BivarPoly::constant(1) + BivarPoly::monomial(1, 2, 0) - BivarPoly::variable_v();
    BivarPoly pm1 = BivarPoly::constant(1);
    BivarPoly p = arg;
    for (unsigned j = 1; j < k; ++j) {
        BivarPoly next = BivarPoly::constant(2) * arg * p - BivarPoly::monomial(4, 2, 0) * pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    BivarPoly lhs = zeta_family().g_k(k).substitute_q_power(2);
    BigInt scale = 1;
    scale <<= (k - 1);
    lhs = BivarPoly::constant(scale) * lhs;
    if (!(lhs == p)) return false;

    // Redundant floating-point guard on the original sqrt(q) form.
    const double q0 = 4.0, v0 = 3.0;
    const UnivarPoly tk = chebyshev_t(k);
    double targ = (1.0 + q0 - v0) / (2.0 * std::sqrt(q0));
    double tval = 0.0;
    for (std::size_t e = tk.coeffs().size(); e-- > 0;)
        tval = tval * targ + tk.coeffs()[e].get_d();
    const double rhs = 2.0 * std::pow(q0, k / 2.0) * tval;
    const double ghs = zeta_family().g_k(k).eval(4, 3).get_d();
    const double denom = std::max(1.0, std::abs(ghs));
    return std::abs(ghs - rhs) <= 1e-6 * denom;
}

bool chebforms_check(unsigned k) {
    if (k < 1) throw IndexError("chebforms_check: k must be >= 1");
    const BivarPoly nk = zeta_family().n_k(k);
    // q = 0: N_k(0, v) = 1 - (1-v)^k.
    BivarPoly lhs0 = nk.substitute_q_const(0);
    BivarPoly pow = BivarPoly::constant(1);
    const BivarPoly one_minus_v = BivarPoly::constant(1) - BivarPoly::variable_v();
    for (unsigned i = 0; i < k; ++i) pow *= one_minus_v;
    if (!(lhs0 == BivarPoly::constant(1) - pow)) return false;
    // q = 1 with halves cleared: 2^k N_k(1,v) = 2^{k+1} - 2 U_k where
    // U_j = 2^j T_j((2-v)/2) obeys U_{j+1} = 2(2-v) U_j - 4 U_{j-1}.
    const BivarPoly two_minus_v = BivarPoly::constant(2) - BivarPoly::variable_v();
    BivarPoly um1 = BivarPoly::constant(1);
    BivarPoly u = two_minus_v;
    for (unsigned j = 1; j < k; ++j) {
        BivarPoly next = BivarPoly::constant(2) * two_minus_v * u - BivarPoly::constant(4) * um1;
        um1 = std::move(u);
        u = std::move(next);
    }
    BigInt scale = 1;
    scale <<= k;
    BivarPoly lhs1 = BivarPoly::constant(scale) * nk.substitute_q_const(1);
    BivarPoly rhs1 = BivarPoly::constant(scale * 2) - BivarPoly::constant(2) * u;
    return lhs1 == rhs1;
}

bool eigenvalue_product_check(unsigned k, unsigned samples) {
    if (k < 1 || k > 24) throw IndexError("eigenvalue_product_check: supported range is 1..24");
    const BivarPoly nk = zeta_family().n_k(k);
    std::mt19937 rng(k * 1000003u + 12345u);
    std::uniform_int_distribution<int> dist(1, 20);
    const double two_pi = 2.0 * std::acos(-1.0);
    for (unsigned s = 0; s < samples; ++s) {
        const int q0 = dist(rng), v0 = dist(rng);
        std::complex<double> prod(1.0, 0.0);
        for (unsigned j = 1; j <= k; ++j) {
            const double ang = two_pi * j / k;
            const std::complex<double> w(std::cos(ang), std::sin(ang));
            const double angk = two_pi * (k - j) / k;
            const std::complex<double> wk(std::cos(angk), std::sin(angk));
            prod *= (std::complex<double>(1.0 + q0 - v0, 0.0) - double(q0) * w - wk);
        }
        const double got = (-prod).real();
        const double imag = (-prod).imag();
        const double exact = nk.eval(q0, v0).get_d();
        const double denom = std::max(1.0, std::abs(exact));
        if (std::abs(got - exact) > 1e-8 * denom) return false;
        if (std::abs(imag) > 1e-8 * denom) return false;
    }
    return true;
}

}  // namespace ellcomb
