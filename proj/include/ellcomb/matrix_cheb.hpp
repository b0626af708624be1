// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_MATRIX_CHEB_HPP
#define ELLCOMB_MATRIX_CHEB_HPP

#include <vector>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/univar_poly.hpp"

namespace ellcomb {

// Square matrix over the bivariate polynomial ring.
class PolyMatrix {
  public:
    explicit PolyMatrix(unsigned dim);
    static PolyMatrix identity(unsigned dim);

    unsigned dim() const { return dim_; }
    BivarPoly& at(unsigned i, unsigned j) { return entries_[i * dim_ + j]; }
    const BivarPoly& at(unsigned i, unsigned j) const { return entries_[i * dim_ + j]; }

  private:
    unsigned dim_;
    std::vector<BivarPoly> entries_;
};

// The "three-line" circulant M_k: M_1 = [-v], M_2 has off-diagonal -1-q, and
// for k >= 3 the bands are superdiagonal -1 / subdiagonal -q with wrapped
// corners (top-right -q, bottom-left -1).  det M_k = -N_k.
PolyMatrix build_mk(unsigned k);
// Tridiagonal M'_k: diagonal 1+q-v, subdiagonal -1, superdiagonal -q except
// -2q in the first row.  det M'_k = 1+q^k-N_k.
PolyMatrix build_mk_prime(unsigned k);

// Exact determinant by fraction-free (Bareiss) elimination; every division
// is exact over the polynomial ring.
BivarPoly det_poly(const PolyMatrix& m);

// Chebyshev polynomials of the first kind, T_0 = 1, T_1 = x.
UnivarPoly chebyshev_t(unsigned k);

// Verifies 1+q^k-N_k = 2 q^{k/2} T_k((1+q-N_1)/(2 sqrt q)) exactly in
// Z[u,v] with q = u^2 (companion sequence P_k = (2u)^k T_k(...)), plus a
// floating-point spot check of the same identity.
bool cheb_identity_check(unsigned k);

// Verifies N_k(0,v) = -(1-v)^k + 1 and N_k(1,v) = -2 T_k(-v/2+1) + 2, the
// latter with denominators cleared by the 2^k scaling.
bool chebforms_check(unsigned k);

// Numeric check of -prod_j ((1+q-v) - q w^j - w^{k-j}) = N_k(q,v) at random
// integer samples, relative tolerance 1e-8; k <= 24.
bool eigenvalue_product_check(unsigned k, unsigned samples);

}  // namespace ellcomb

#endif
