// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/univar_poly.hpp"

#include <utility>

#include "ellcomb/errors.hpp"

namespace ellcomb {

namespace {
const BigInt kZero = 0;
}

UnivarPoly::UnivarPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivarPoly UnivarPoly::constant(BigInt c) {
    UnivarPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

UnivarPoly UnivarPoly::x() { return monomial(1, 1); }

UnivarPoly UnivarPoly::monomial(BigInt c, std::size_t exp) {
    UnivarPoly p;
    if (c != 0) {
        p.coeffs_.assign(exp + 1, BigInt(0));
        p.coeffs_[exp] = std::move(c);
    }
    return p;
}

const BigInt& UnivarPoly::coeff(std::size_t e) const {
    return e < coeffs_.size() ? coeffs_[e] : kZero;
}

void UnivarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UnivarPoly UnivarPoly::operator-() const {
    UnivarPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UnivarPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

BigInt UnivarPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivarPoly UnivarPoly::compose(const UnivarPoly& inner) const {
    UnivarPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + constant(*it);
    return acc;
}

UnivarPoly UnivarPoly::negate_variable() const {
    UnivarPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

std::string UnivarPoly::render(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t n = coeffs_.size(); n-- > 0;) {
        const BigInt& c = coeffs_[n];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        BigInt mag = abs(c);
        out += mag.get_str();
        if (n >= 1) {
            out += "*";
            out += var;
            if (n >= 2) out += "^" + std::to_string(n);
        }
    }
    return out;
}

UnivarPoly exact_div(const UnivarPoly& a, const UnivarPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("univariate exact_div: divisor is zero");
    if (a.is_zero()) return {};
    std::vector<BigInt> rem = a.coeffs();
    const std::vector<BigInt>& d = b.coeffs();
    int da = a.degree(), db = b.degree();
    if (da < db) throw NotDivisibleError("univariate exact_div: degree too small");
    std::vector<BigInt> quo(static_cast<std::size_t>(da - db) + 1, BigInt(0));
    for (int k = da - db; k >= 0; --k) {
        BigInt& lead = rem[static_cast<std::size_t>(k + db)];
        if (lead % d.back() != 0)
            throw NotDivisibleError("univariate exact_div: leading coefficient not divisible");
        BigInt c = lead / d.back();
        if (c != 0) {
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(k + j)] -= c * d[static_cast<std::size_t>(j)];
        }
        quo[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const BigInt& r : rem)
        if (r != 0) throw NotDivisibleError("univariate exact_div: nonzero remainder");
    return UnivarPoly(std::move(quo));
}

}  // namespace ellcomb
