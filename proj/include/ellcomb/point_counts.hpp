// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_POINT_COUNTS_HPP
#define ELLCOMB_POINT_COUNTS_HPP

#include <deque>
#include <mutex>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/univar_poly.hpp"

namespace ellcomb {

// Memoized families N_k, G_k = 1+q^k-N_k, E_k as polynomials in (q, v) where
// v stands for N_1.  Conventions: N_0 = 0 (so G_0 = 2), E_0 = 1, H_0 = 1.
// Thread-safe; entries are immutable once built and references stay valid.
class ZetaFamily {
  public:
    const BivarPoly& n_k(unsigned k);
    const BivarPoly& g_k(unsigned k);
    const BivarPoly& e_k(unsigned k);

  private:
    void ensure(unsigned k);
    std::mutex mu_;
    std::deque<BivarPoly> g_, n_, e_;
};

// Process-wide memo shared by the free functions below.
ZetaFamily& zeta_family();

// N_k by the three-term recurrence G_{k+1} = (1+q-v)G_k - qG_{k-1}.
BivarPoly n_k_recurrence(unsigned k);
// N_k as the partition-indexed multinomial sum over lambda |- k.
BivarPoly n_k_partition(unsigned k);
// N_k and E_k as the double binomial closed forms.
BivarPoly n_k_binomial(unsigned k);
BivarPoly e_k_binomial(unsigned k);
// P_{i,k}(q), the coefficient of (-1)^{i-1} v^i in N_k; 1 <= i <= k.
UnivarPoly p_ik(unsigned i, unsigned k);
// H_0 = 1, H_k = v(1+q+...+q^{k-1}).
BivarPoly h_k(unsigned k);
// E_k by the signed three-term recurrence.
BivarPoly e_k_recurrence(unsigned k);
// E_k assembled from the P_{i,k} family with the i/k prefactor.
BivarPoly e_k_from_pik(unsigned k);

}  // namespace ellcomb

#endif
