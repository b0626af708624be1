// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_BIGINT_HPP
#define ELLCOMB_BIGINT_HPP

#include <gmpxx.h>

#include <vector>

namespace ellcomb {

// Coefficient domain for every polynomial in the project.  Arbitrary precision
// is not optional: coefficients beyond 10^60 occur in N_105.
using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k); zero when k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// total! / prod(parts[i]!).  The parts need not sum to total; the remainder
// counts as a single block of indistinguishable leftovers only if the caller
// arranged it so -- here callers always pass parts summing to total.
inline BigInt multinomial(unsigned long total, const std::vector<unsigned>& parts) {
    BigInt r = factorial(total);
    for (unsigned p : parts) r /= factorial(p);
    return r;
}

}  // namespace ellcomb

#endif
