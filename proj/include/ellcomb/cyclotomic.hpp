// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_CYCLOTOMIC_HPP
#define ELLCOMB_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <vector>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/univar_poly.hpp"

namespace ellcomb {

int mobius(unsigned n);
unsigned long euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Memoized Cyc_d / ECyc_d tables.  Cyclotomic polynomials follow the
// product normalization 1 - x^k = prod_{d|k} Cyc_d(x), so Cyc_1 = 1 - x and
// Cyc_d for d >= 2 is the standard monic cyclotomic polynomial.
class CycTable {
  public:
    const UnivarPoly& cyc(unsigned d);
    const BivarPoly& ecyc(unsigned d);

  private:
    std::mutex mu_;
    std::map<unsigned, UnivarPoly> cyc_;
    std::map<unsigned, BivarPoly> ecyc_;
};

CycTable& cyc_table();

// Cyc_d(x) by exact division: (1 - x^d) / prod of the lower divisors.
UnivarPoly cyc_d(unsigned d);

// ECyc_d by Moebius inversion over the N_e: prod N_e^{mu(d/e)}, where the
// negative exponents are carried out by exact division (guaranteed exact by
// the factorization N_k = prod_{d|k} ECyc_d).
BivarPoly ecyc_d(unsigned d);

// Wheel counterpart: WCyc_1 = v, WCyc_d = ECyc_d|_{v -> -v} for d >= 2 (sign
// normalized so that prod_{d|k} WCyc_d equals the wheel polynomial W_k).
BivarPoly wcyc_d(unsigned d);

// The piecewise constants Cyc_d(1) and the standard-monic Cyc_d(-1).
long c_func(unsigned d);
long c_prime_func(unsigned d);

// Checks ECyc_d|_{v=0} = C(d) Cyc_d(q) and ECyc_d|_{v=2q+2} = M Cyc_d(-q)
// with M = eval(Cyc_d, -1), both as exact polynomial identities.  In this
// normalization M = C'(d) for every d >= 2; at d = 1 both factors flip sign
// relative to the monic convention, leaving the product identical.
bool specialization_check(unsigned d);

// Q_{i,d}(q) = (-1)^i * coefficient of v^i in ECyc_d; 1 <= i <= phi(d).
UnivarPoly q_id(unsigned i, unsigned d);

struct SignReport {
    struct Row {
        unsigned i = 0;
        unsigned nonzero = 0;
        unsigned negative = 0;  // coefficients of Q_{i,d} breaking positivity
    };
    unsigned d = 0;
    std::vector<Row> rows;
};

SignReport sign_report(unsigned d);

// ECyc_{2^m} = 2 Cyc_{2^{m-1}}(q) - N_{2^{m-1}} as exact polynomials; m <= 6.
bool ecyc_power2_check(unsigned m);

}  // namespace ellcomb

#endif
