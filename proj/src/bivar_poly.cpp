// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/bivar_poly.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "ellcomb/errors.hpp"

namespace ellcomb {

BivarPoly BivarPoly::constant(BigInt c) { return monomial(std::move(c), 0, 0); }
BivarPoly BivarPoly::variable_q() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::variable_v() { return monomial(1, 0, 1); }

BivarPoly BivarPoly::monomial(BigInt c, std::uint32_t eq, std::uint32_t ev) {
    BivarPoly p;
    if (c != 0) p.terms_.emplace(Monomial{eq, ev}, std::move(c));
    return p;
}

BivarPoly BivarPoly::from_univar_in_q(const UnivarPoly& p) {
    BivarPoly r;
    for (std::size_t e = 0; e < p.coeffs().size(); ++e)
        if (p.coeffs()[e] != 0)
            r.terms_.emplace(Monomial{static_cast<std::uint32_t>(e), 0}, p.coeffs()[e]);
    return r;
}

int BivarPoly::deg_q() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.eq) > d) d = static_cast<int>(m.eq);
    return d;
}

int BivarPoly::deg_v() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.ev);
}

BigInt BivarPoly::coefficient(std::uint32_t eq, std::uint32_t ev) const {
    auto it = terms_.find(Monomial{eq, ev});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BivarPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            r.add_term(Monomial{ma.eq + mb.eq, ma.ev + mb.ev}, ca * cb);
        }
    }
    return r;
}

UnivarPoly BivarPoly::coefficient_of_v(std::uint32_t i) const {
    std::vector<BigInt> coeffs;
    auto lo = terms_.lower_bound(Monomial{0, i});
    auto hi = terms_.lower_bound(Monomial{0, i + 1});
    for (auto it = lo; it != hi; ++it) {
        if (it->first.eq >= coeffs.size()) coeffs.resize(it->first.eq + 1, BigInt(0));
        coeffs[it->first.eq] = it->second;
    }
    return UnivarPoly(std::move(coeffs));
}

BivarPoly BivarPoly::substitute_v(const BivarPoly& s) const {
    if (terms_.empty()) return {};
    // Horner over v with q-only coefficient slices.
    const std::uint32_t top = terms_.rbegin()->first.ev;
    std::vector<BivarPoly> slice(top + 1);
    for (const auto& [m, c] : terms_) slice[m.ev].add_term(Monomial{m.eq, 0}, c);
    BivarPoly acc = slice[top];
    for (std::uint32_t i = top; i-- > 0;) acc = acc * s + slice[i];
    return acc;
}

BivarPoly BivarPoly::substitute_q_power(std::uint32_t k) const {
    if (k < 1) throw IndexError("substitute_q_power: exponent multiplier must be >= 1");
    BivarPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.eq * k, m.ev}, c);
    return r;
}

BivarPoly BivarPoly::substitute_q_const(const BigInt& c) const {
    BivarPoly r;
    for (const auto& [m, coef] : terms_) {
        BigInt qpow;
        mpz_pow_ui(qpow.get_mpz_t(), c.get_mpz_t(), m.eq);
        r.add_term(Monomial{0, m.ev}, coef * qpow);
    }
    return r;
}

BigInt BivarPoly::eval(const BigInt& q_val, const BigInt& v_val) const {
    if (terms_.empty()) return 0;
    // Two-level Horner: inner over q within each v-slice, outer over v.
    // Reverse map order walks terms by descending (ev, eq).
    BigInt result = 0;
    std::uint32_t last_ev = terms_.rbegin()->first.ev;
    auto rit = terms_.rbegin();
    while (rit != terms_.rend()) {
        const std::uint32_t cur_ev = rit->first.ev;
        BigInt slice = rit->second;
        std::uint32_t prev_eq = rit->first.eq;
        ++rit;
        while (rit != terms_.rend() && rit->first.ev == cur_ev) {
            for (std::uint32_t g = rit->first.eq; g < prev_eq; ++g) slice *= q_val;
            slice += rit->second;
            prev_eq = rit->first.eq;
            ++rit;
        }
        for (std::uint32_t g = 0; g < prev_eq; ++g) slice *= q_val;
        for (std::uint32_t g = cur_ev; g < last_ev; ++g) result *= v_val;
        result += slice;
        last_ev = cur_ev;
    }
    for (std::uint32_t g = 0; g < last_ev; ++g) result *= v_val;
    return result;
}

std::string BivarPoly::render(std::string_view var_v) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        BigInt mag = abs(c);
        out += mag.get_str();
        if (m.eq > 0) {
            out += "*q";
            if (m.eq >= 2) out += "^" + std::to_string(m.eq);
        }
        if (m.ev > 0) {
            out += "*";
            out += var_v;
            if (m.ev >= 2) out += "^" + std::to_string(m.ev);
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
};

BigInt parse_integer(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) c.fail("expected digits");
    return BigInt(std::string(c.s.substr(start, c.pos - start)), 10);
}

std::uint32_t parse_exponent(Cursor& c) {
    std::size_t at = c.pos;
    BigInt e = parse_integer(c);
    if (e > 1000000) throw ParseError("exponent too large", at);
    return static_cast<std::uint32_t>(e.get_ui());
}

}  // namespace

BivarPoly BivarPoly::parse(std::string_view text) {
    Cursor c{text};
    BivarPoly result;
    c.skip_ws();
    if (c.done()) c.fail("empty polynomial text");
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
            if (c.peek() == '-') sign = -1;
            ++c.pos;
            c.skip_ws();
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        if (c.done()) c.fail("expected a term");

        BigInt coeff = 1;
        std::uint32_t eq = 0, ev = 0;
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = parse_integer(c);
            saw_any = true;
            while (!c.done() && c.peek() == '*') {
                ++c.pos;
                if (c.done() || (c.peek() != 'q' && c.peek() != 'v'))
                    c.fail("expected 'q' or 'v' after '*'");
                char var = c.peek();
                ++c.pos;
                std::uint32_t e = 1;
                if (!c.done() && c.peek() == '^') {
                    ++c.pos;
                    e = parse_exponent(c);
                }
                if (var == 'q')
                    eq += e;
                else
                    ev += e;
            }
        } else if (c.peek() == 'q' || c.peek() == 'v') {
            // Bare variables accepted with an implicit coefficient of 1.
            while (!c.done() && (c.peek() == 'q' || c.peek() == 'v')) {
                char var = c.peek();
                ++c.pos;
                std::uint32_t e = 1;
                if (!c.done() && c.peek() == '^') {
                    ++c.pos;
                    e = parse_exponent(c);
                }
                if (var == 'q')
                    eq += e;
                else
                    ev += e;
                saw_any = true;
                if (!c.done() && c.peek() == '*') {
                    ++c.pos;
                    if (c.done() || (c.peek() != 'q' && c.peek() != 'v'))
                        c.fail("expected 'q' or 'v' after '*'");
                }
            }
        }
        if (!saw_any) c.fail("expected a coefficient or variable");
        result.add_term(Monomial{eq, ev}, sign * coeff);
        first = false;
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-') c.fail("unexpected character");
    }
    return result;
}

BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("bivariate exact_div: divisor is zero");
    BivarPoly rem = a;
    BivarPoly quo;
    const auto& lb = *b.terms().rbegin();  // leading term of b in the (ev, eq) order
    while (!rem.is_zero()) {
        const auto& lr = *rem.terms().rbegin();
        if (lr.first.ev < lb.first.ev || lr.first.eq < lb.first.eq)
            throw NotDivisibleError("bivariate exact_div: leading monomial not divisible");
        if (lr.second % lb.second != 0)
            throw NotDivisibleError("bivariate exact_div: leading coefficient not divisible");
        Monomial m{lr.first.eq - lb.first.eq, lr.first.ev - lb.first.ev};
        BigInt c = lr.second / lb.second;
        quo.add_term(m, c);
        // rem -= (c * m) * b
        for (const auto& [mb, cb] : b.terms())
            rem.add_term(Monomial{mb.eq + m.eq, mb.ev + m.ev}, -c * cb);
    }
    return quo;
}

}  // namespace ellcomb
