// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_BIVAR_POLY_HPP
#define ELLCOMB_BIVAR_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "ellcomb/bigint.hpp"
#include "ellcomb/univar_poly.hpp"

namespace ellcomb {

struct Monomial {
    std::uint32_t eq = 0;  // exponent of q
    std::uint32_t ev = 0;  // exponent of v
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Term order: by v-degree, then q-degree.  This is the order used both for
// exact division (leading term = last map entry) and, reversed, for the
// canonical rendering.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.ev != b.ev) return a.ev < b.ev;
        return a.eq < b.eq;
    }
};

// Sparse exact bivariate polynomial over BigInt in variables (q, v).  The
// second variable v stands for N_1 on the curve side and for t on the tree
// side; both readings share this one type.  Canonical form: no stored
// coefficient is zero, so equality is term-map equality.
class BivarPoly {
  public:
    using TermMap = std::map<Monomial, BigInt, MonomialOrder>;

    BivarPoly() = default;  // zero

    static BivarPoly constant(BigInt c);
    static BivarPoly variable_q();
    static BivarPoly variable_v();
    static BivarPoly monomial(BigInt c, std::uint32_t eq, std::uint32_t ev);
    static BivarPoly from_univar_in_q(const UnivarPoly& p);

    bool is_zero() const { return terms_.empty(); }
    // -1 sentinel for the zero polynomial.
    int deg_q() const;
    int deg_v() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coefficient(std::uint32_t eq, std::uint32_t ev) const;

    // Adds c * q^eq * v^ev, pruning the term if the sum cancels.
    void add_term(const Monomial& m, const BigInt& c);

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly operator-() const;
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    // The univariate-in-q polynomial multiplying v^i.
    UnivarPoly coefficient_of_v(std::uint32_t i) const;

    // v -> s, expanded exactly (Horner in v).
    BivarPoly substitute_v(const BivarPoly& s) const;
    // q -> q^k, exponents multiplied; requires k >= 1.
    BivarPoly substitute_q_power(std::uint32_t k) const;
    // q -> constant.
    BivarPoly substitute_q_const(const BigInt& c) const;

    BigInt eval(const BigInt& q_val, const BigInt& v_val) const;

    // Canonical text: monomials sorted by (e_v desc, e_q desc), explicit
    // coefficients and signs, e.g. "-1*q^3*v^2 + 2*q*v - 5".  var_v renames
    // the second variable for display only; parse() accepts "v".
    std::string render(std::string_view var_v = "v") const;
    static BivarPoly parse(std::string_view text);

  private:
    TermMap terms_;
};

// Exact quotient a / b via multivariate long division in the (ev, eq) order;
// any nonzero remainder at termination throws NotDivisibleError.  b = 0
// throws DivisionByZeroError.
BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b);

}  // namespace ellcomb

#endif
