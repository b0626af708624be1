// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/point_counts.hpp"

#include <stdexcept>

#include "ellcomb/errors.hpp"
#include "ellcomb/partitions.hpp"

namespace ellcomb {

namespace {

BivarPoly one_plus_q_minus_v() {
    BivarPoly p = BivarPoly::constant(1);
    p += BivarPoly::variable_q();
    p -= BivarPoly::variable_v();
    return p;
}

void require_positive(unsigned k, const char* what) {
    if (k < 1) throw IndexError(std::string(what) + ": index must be >= 1");
}

}  // namespace

void ZetaFamily::ensure(unsigned k) {
    if (g_.empty()) {
        g_.push_back(BivarPoly::constant(2));
        g_.push_back(one_plus_q_minus_v());
        n_.push_back(BivarPoly());                // N_0 = 0
        n_.push_back(BivarPoly::variable_v());    // N_1 = v
        e_.push_back(BivarPoly::constant(1));     // E_0 = 1
        e_.push_back(BivarPoly::variable_v());    // E_1 = v
        BivarPoly e2 = BivarPoly::variable_v() * BivarPoly::variable_v();
        e2 -= (BivarPoly::constant(1) + BivarPoly::variable_q()) * BivarPoly::variable_v();
        e_.push_back(e2);                         // E_2 = -(1+q)v + v^2
    }
    const BivarPoly coef = one_plus_q_minus_v();
    const BivarPoly q = BivarPoly::variable_q();
    while (g_.size() <= k) {
        const std::size_t m = g_.size();
        g_.push_back(coef * g_[m - 1] - q * g_[m - 2]);
        BivarPoly nk = BivarPoly::constant(1) + BivarPoly::monomial(1, static_cast<std::uint32_t>(m), 0);
        nk -= g_[m];
        n_.push_back(std::move(nk));
    }
    while (e_.size() <= k) {
        const std::size_t m = e_.size();  // building E_m from E_{m-1}, E_{m-2}
        e_.push_back(-(coef * e_[m - 1]) - q * e_[m - 2]);
    }
}

const BivarPoly& ZetaFamily::n_k(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(k);
    return n_[k];
}

const BivarPoly& ZetaFamily::g_k(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(k);
    return g_[k];
}

const BivarPoly& ZetaFamily::e_k(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(k);
    return e_[k];
}

ZetaFamily& zeta_family() {
    static ZetaFamily family;
    return family;
}

BivarPoly n_k_recurrence(unsigned k) {
    require_positive(k, "n_k_recurrence");
    return zeta_family().n_k(k);
}

BivarPoly h_k(unsigned k) {
    if (k == 0) return BivarPoly::constant(1);
    BivarPoly geo;
    for (unsigned j = 0; j < k; ++j) geo.add_term(Monomial{j, 0}, 1);
    return geo * BivarPoly::variable_v();
}

BivarPoly n_k_partition(unsigned k) {
    require_positive(k, "n_k_partition");
    BivarPoly total;
    for_each_partition(k, [&](const Partition& lam) {
        BigInt pref = arrangement_count(k, lam);
        if (lam.length() % 2 == 0) pref = -pref;
        BivarPoly term = BivarPoly::constant(pref);
        for (unsigned part : lam.parts) term *= h_k(part);
        total += term;
    });
    return total;
}

UnivarPoly p_ik(unsigned i, unsigned k) {
    if (i < 1 || i > k) throw IndexError("p_ik: require 1 <= i <= k");
    // Sum over j while C(k-1-j, i-1) is nonzero, i.e. j <= k-i.  Each term is
    // (k/i) * C(k-1-j, i-1) * C(i+j-1, j), an integer for every j.
    std::vector<BigInt> coeffs(k - i + 1, BigInt(0));
    for (unsigned j = 0; j + i <= k; ++j) {
        BigRat c(BigInt(k) * binomial(k - 1 - j, i - 1) * binomial(i + j - 1, j), BigInt(i));
        c.canonicalize();
        if (c.get_den() != 1)
            throw std::logic_error("p_ik: non-integral coefficient");
        coeffs[j] = c.get_num();
    }
    return UnivarPoly(std::move(coeffs));
}

BivarPoly n_k_binomial(unsigned k) {
    require_positive(k, "n_k_binomial");
    BivarPoly total;
    for (unsigned i = 1; i <= k; ++i) {
        const UnivarPoly p = p_ik(i, k);
        const int sign = (i % 2 == 1) ? 1 : -1;
        for (std::size_t j = 0; j < p.coeffs().size(); ++j)
            total.add_term(Monomial{static_cast<std::uint32_t>(j), i}, sign * p.coeffs()[j]);
    }
    return total;
}

BivarPoly e_k_binomial(unsigned k) {
    require_positive(k, "e_k_binomial");
    BivarPoly total;
    for (unsigned i = 1; i <= k; ++i) {
        const int sign = ((k + i) % 2 == 0) ? 1 : -1;
        for (unsigned j = 0; j + i <= k; ++j) {
            BigInt c = binomial(k - 1 - j, i - 1) * binomial(i + j - 1, j);
            total.add_term(Monomial{j, i}, sign * c);
        }
    }
    return total;
}

BivarPoly e_k_recurrence(unsigned k) { return zeta_family().e_k(k); }

BivarPoly e_k_from_pik(unsigned k) {
    require_positive(k, "e_k_from_pik");
    BivarPoly total;
    for (unsigned i = 1; i <= k; ++i) {
        const UnivarPoly p = p_ik(i, k);
        const int sign = ((k + i) % 2 == 0) ? 1 : -1;
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
            BigRat c(BigInt(i) * p.coeffs()[j], BigInt(k));
            c.canonicalize();
            if (c.get_den() != 1)
                throw std::logic_error("e_k_from_pik: non-integral coefficient");
            total.add_term(Monomial{static_cast<std::uint32_t>(j), i}, sign * c.get_num());
        }
    }
    return total;
}

}  // namespace ellcomb
