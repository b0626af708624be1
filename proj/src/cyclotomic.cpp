// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/cyclotomic.hpp"

#include "ellcomb/errors.hpp"
#include "ellcomb/point_counts.hpp"

namespace ellcomb {

namespace {

void require_positive_index(unsigned n, const char* what) {
    if (n < 1) throw IndexError(std::string(what) + ": index must be >= 1");
}

// Smallest prime factor, or n itself when prime; n >= 2.
unsigned smallest_prime_factor(unsigned n) {
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// True when n = p^k for the single prime p (k >= 1); sets p.
bool is_prime_power(unsigned n, unsigned& p) {
    if (n < 2) return false;
    p = smallest_prime_factor(n);
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

int mobius(unsigned n) {
    require_positive_index(n, "mobius");
    int result = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

unsigned long euler_phi(unsigned n) {
    require_positive_index(n, "euler_phi");
    unsigned long result = n;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

const UnivarPoly& CycTable::cyc(unsigned d) {
    std::lock_guard<std::mutex> lock(mu_);
    // Build every missing divisor bottom-up so the recursion stays iterative.
    for (unsigned e : divisors(d)) {
        if (cyc_.count(e)) continue;
        UnivarPoly num = UnivarPoly::constant(1) - UnivarPoly::monomial(1, e);
        for (unsigned f : divisors(e))
            if (f < e) num = exact_div(num, cyc_.at(f));
        cyc_.emplace(e, std::move(num));
    }
    return cyc_.at(d);
}

const BivarPoly& CycTable::ecyc(unsigned d) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ecyc_.find(d);
        if (it != ecyc_.end()) return it->second;
    }
    // Heavy N_e products happen outside the lock; zeta_family() has its own.
    BivarPoly num = BivarPoly::constant(1);
    std::vector<unsigned> dens;
    for (unsigned e : divisors(d)) {
        const int mu = mobius(d / e);
        if (mu == 1)
            num *= zeta_family().n_k(e);
        else if (mu == -1)
            dens.push_back(e);
    }
    for (unsigned e : dens) num = exact_div(num, zeta_family().n_k(e));
    std::lock_guard<std::mutex> lock(mu_);
    return ecyc_.emplace(d, std::move(num)).first->second;
}

CycTable& cyc_table() {
    static CycTable table;
    return table;
}

UnivarPoly cyc_d(unsigned d) {
    require_positive_index(d, "cyc_d");
    return cyc_table().cyc(d);
}

BivarPoly ecyc_d(unsigned d) {
    require_positive_index(d, "ecyc_d");
    return cyc_table().ecyc(d);
}

BivarPoly wcyc_d(unsigned d) {
    require_positive_index(d, "wcyc_d");
    if (d == 1) return BivarPoly::variable_v();
    return ecyc_d(d).substitute_v(-BivarPoly::variable_v());
}

long c_func(unsigned d) {
    require_positive_index(d, "c_func");
    if (d == 1) return 0;
    unsigned p = 0;
    if (is_prime_power(d, p)) return static_cast<long>(p);
    return 1;
}

long c_prime_func(unsigned d) {
    require_positive_index(d, "c_prime_func");
    if (d == 1) return -2;
    if (d == 2) return 0;
    unsigned p = 0;
    if (d % 2 == 0 && is_prime_power(d / 2, p)) return static_cast<long>(p);
    return 1;
}

bool specialization_check(unsigned d) {
    require_positive_index(d, "specialization_check");
    const BivarPoly e = ecyc_d(d);
    const UnivarPoly cyc = cyc_d(d);

    const BivarPoly at_zero = e.substitute_v(BivarPoly());
    BivarPoly want0 = BivarPoly::constant(c_func(d)) * BivarPoly::from_univar_in_q(cyc);
    if (!(at_zero == want0)) return false;

    BivarPoly two_q_plus_two = BivarPoly::constant(2) + BivarPoly::monomial(2, 1, 0);
    const BivarPoly at_twist = e.substitute_v(two_q_plus_two);
    const BigInt mult = cyc.eval(-1);
    BivarPoly want1 =
        BivarPoly::constant(mult) * BivarPoly::from_univar_in_q(cyc.negate_variable());
    return at_twist == want1;
}

UnivarPoly q_id(unsigned i, unsigned d) {
    require_positive_index(d, "q_id");
    const unsigned long phi = euler_phi(d);
    if (i < 1 || i > phi) throw IndexError("q_id: require 1 <= i <= phi(d)");
    UnivarPoly p = ecyc_d(d).coefficient_of_v(i);
    return (i % 2 == 0) ? p : -p;
}

SignReport sign_report(unsigned d) {
    SignReport report;
    report.d = d;
    const unsigned long phi = euler_phi(d);
    for (unsigned i = 1; i <= phi; ++i) {
        const UnivarPoly qi = q_id(i, d);
        SignReport::Row row;
        row.i = i;
        for (const BigInt& c : qi.coeffs()) {
            if (c != 0) ++row.nonzero;
            if (c < 0) ++row.negative;
        }
        report.rows.push_back(row);
    }
    return report;
}

bool ecyc_power2_check(unsigned m) {
    if (m < 1 || m > 6) throw IndexError("ecyc_power2_check: supported range is 1..6");
    const unsigned half = 1u << (m - 1);
    BivarPoly rhs = BivarPoly::constant(2) + BivarPoly::monomial(2, half, 0);
    rhs -= zeta_family().n_k(half);
    return ecyc_d(1u << m) == rhs;
}

}  // namespace ellcomb
