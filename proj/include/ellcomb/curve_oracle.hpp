// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_CURVE_ORACLE_HPP
#define ELLCOMB_CURVE_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ellcomb/bigint.hpp"
#include "ellcomb/univar_poly.hpp"

namespace ellcomb {

// Deterministic: the first monic irreducible of degree k over F_p in the
// counting order m = sum c_i p^i of the non-leading coefficients.  Returned
// low-to-high including the leading 1 (length k+1).  Requires p prime,
// 1 <= k <= 6, p^k <= 10^6.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k);

bool is_prime_u32(std::uint32_t n);

// F_{p^k} as F_p[x]/(modulus), elements stored as coefficient vectors of
// length k (low-to-high).  Built directly over F_p, never as a tower.
class ExtField {
  public:
    using Element = std::vector<std::uint32_t>;

    ExtField(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Element zero() const { return Element(k_, 0); }
    Element one() const { return from_base(1); }
    Element from_base(std::uint32_t a) const;

    // Bijection with 0..order-1 by base-p digits, used for table indexing.
    Element element_at(std::uint64_t index) const;
    std::uint64_t index_of(const Element& a) const;

    bool is_zero(const Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(Element base, std::uint64_t e) const;
    // Multiplicative inverse via a^(order-2); zero input throws.
    Element inverse(const Element& a) const;

    std::string render(const Element& a) const;  // "[c0,c1,...]"

  private:
    std::uint32_t p_, k_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
};

// Short-Weierstrass curve y^2 = x^3 + a x + b over F_p, p >= 5 prime,
// nonsingular (4a^3 + 27b^2 != 0).
struct Curve {
    std::uint32_t p = 0, a = 0, b = 0;
};

Curve make_curve(std::uint32_t p, std::uint32_t a, std::uint32_t b);
// Parses the CLI curve spec "p,a,b".
Curve parse_curve_spec(const std::string& spec);

struct CurvePoint {
    bool infinity = true;
    ExtField::Element x, y;
    std::uint32_t p = 0, k = 0;  // field tag for mismatch detection

    static CurvePoint at_infinity() { return CurvePoint{}; }
};

CurvePoint make_point(const ExtField& f, ExtField::Element x, ExtField::Element y);
bool on_curve(const CurvePoint& pt, const Curve& c, const ExtField& f);
bool points_equal(const CurvePoint& a, const CurvePoint& b);

// 1 + #{(x,y) : y^2 = x^3 + ax + b over F_{p^k}} by full sweep with a
// precomputed square-multiplicity table.  SizeLimit beyond p^k = 3000.
std::uint64_t count_points(const Curve& c, std::uint32_t k);

// eval(N_k, q, N1) -- the symbolic prediction the sweeps are checked against.
BigInt predict_nk(std::uint64_t q, const BigInt& n1, unsigned k);

// Chord-tangent group law with Infinity as identity.
CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q, const Curve& c, const ExtField& f);
CurvePoint point_negate(const CurvePoint& P, const ExtField& f);
// Double-and-add; negative n through negation.
CurvePoint scalar_mul(const BigInt& n, const CurvePoint& P, const Curve& c, const ExtField& f);

// (x, y) -> (x^q, y^q) with q = p, the base-field size of the test curves.
CurvePoint frobenius(const CurvePoint& P, const ExtField& f);

std::vector<CurvePoint> enumerate_points(const Curve& c, const ExtField& f);

// |Ker Cyc_d(pi)| counted inside C(F_{q^d}), which contains the kernel since
// Cyc_d(x) divides 1 - x^d.  Cyc_d(pi) is evaluated pointwise as the integer
// combination sum_i c_i pi^i(P) under the group law.
std::uint64_t endo_kernel_count(const Curve& c, unsigned d);

// |1 + p - N1|^2 <= 4p.
bool hasse_bound_holds(const Curve& c, std::uint64_t n1);

// The fixed verification battery: three curves over each p in {5,7,11,13}.
std::vector<Curve> standard_curve_battery();

}  // namespace ellcomb

#endif
