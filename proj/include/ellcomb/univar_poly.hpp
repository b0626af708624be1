// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_UNIVAR_POLY_HPP
#define ELLCOMB_UNIVAR_POLY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ellcomb/bigint.hpp"

namespace ellcomb {

// Dense univariate integer polynomial.  coeffs[i] is the coefficient of x^i;
// trailing zeros are trimmed so the leading coefficient is nonzero unless the
// polynomial is zero.  Degree of the zero polynomial is -1.
class UnivarPoly {
  public:
    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<BigInt> coeffs);

    static UnivarPoly constant(BigInt c);
    static UnivarPoly x();
    static UnivarPoly monomial(BigInt c, std::size_t exp);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^e (zero beyond the stored range).
    const BigInt& coeff(std::size_t e) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    UnivarPoly& operator+=(const UnivarPoly& o);
    UnivarPoly& operator-=(const UnivarPoly& o);
    UnivarPoly operator-() const;
    friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
    friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
    UnivarPoly& operator*=(const UnivarPoly& o) { return *this = *this * o; }
    friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

    BigInt eval(const BigInt& x) const;
    // this(inner(x)), expanded exactly.
    UnivarPoly compose(const UnivarPoly& inner) const;
    // x -> -x
    UnivarPoly negate_variable() const;

    std::string render(std::string_view var = "x") const;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Exact quotient a / b; throws NotDivisibleError when no integer-polynomial
// quotient exists and DivisionByZeroError when b = 0.
UnivarPoly exact_div(const UnivarPoly& a, const UnivarPoly& b);

}  // namespace ellcomb

#endif
