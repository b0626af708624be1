// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/curve_oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ellcomb/cyclotomic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/point_counts.hpp"

namespace ellcomb {

namespace {

constexpr std::uint64_t kSweepLimit = 3000;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Dense F_p[x] helpers for the irreducibility test; coefficients low-to-high.
using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t deg = mod.size() - 1;  // mod is monic
    for (std::size_t d = r.size(); d-- > deg;) {
        const std::uint64_t c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (std::size_t i = 0; i < deg; ++i)
            r[d - deg + i] = (r[d - deg + i] + (p - mod[i] % p) % p * c) % p;
    }
    r.resize(deg);
    fp_trim(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& mod, std::uint64_t p) {
    FpPoly result{1};
    while (e) {
        if (e & 1) result = fp_mulmod(result, base, mod, p);
        base = fp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // a mod b
        const std::size_t db = b.size() - 1;
        // make b monic
        std::uint64_t inv = 1, base = b.back() % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        FpPoly bm = b;
        for (auto& c : bm) c = c * inv % p;
        FpPoly r = a;
        while (r.size() > db) {
            const std::uint64_t c = r.back();
            const std::size_t shift = r.size() - 1 - db;
            if (c != 0)
                for (std::size_t i = 0; i <= db; ++i)
                    r[shift + i] = (r[shift + i] + (p - bm[i] * c % p)) % p;
            r.pop_back();
            fp_trim(r);
            if (r.size() <= db) break;
        }
        fp_trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_is_irreducible(const FpPoly& f, std::uint32_t k, std::uint64_t p) {
    if (k == 1) return true;
    const FpPoly x{0, 1};
    // x^{p^k} == x (mod f) and gcd(x^{p^{k/t}} - x, f) = 1 for prime t | k.
    FpPoly xq = fp_powmod(x, ipow(p, k), f, p);
    if (!(xq == x)) return false;
    unsigned kk = k;
    for (unsigned t = 2; t <= kk; ++t) {
        if (kk % t != 0) continue;
        while (kk % t == 0) kk /= t;
        FpPoly xs = fp_powmod(x, ipow(p, k / t), f, p);
        // xs - x
        FpPoly diff = xs;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k) {
    if (!is_prime_u32(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (k < 1 || k > 6 || ipow(p, k) > 1000000)
        throw SizeLimitError("find_irreducible: require 1 <= k <= 6 and p^k <= 10^6");
    const std::uint64_t limit = ipow(p, k);
    for (std::uint64_t m = 0; m < limit; ++m) {
        FpPoly f(k + 1, 0);
        std::uint64_t mm = m;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = mm % p;
            mm /= p;
        }
        f[k] = 1;
        if (fp_is_irreducible(f, k, p)) {
            std::vector<std::uint32_t> out(k + 1);
            for (std::uint32_t i = 0; i <= k; ++i) out[i] = static_cast<std::uint32_t>(f[i]);
            return out;
        }
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

ExtField::ExtField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    modulus_ = find_irreducible(p, k);
    order_ = ipow(p, k);
}

ExtField::Element ExtField::from_base(std::uint32_t a) const {
    Element e(k_, 0);
    e[0] = a % p_;
    return e;
}

ExtField::Element ExtField::element_at(std::uint64_t index) const {
    Element e(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        e[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t ExtField::index_of(const Element& a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = k_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

bool ExtField::is_zero(const Element& a) const {
    for (std::uint32_t c : a)
        if (c != 0) return false;
    return true;
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

ExtField::Element ExtField::neg(const Element& a) const {
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
    std::vector<std::uint64_t> acc(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
    }
    for (std::size_t d = acc.size(); d-- > k_;) {
        const std::uint64_t c = acc[d];
        if (c == 0) continue;
        acc[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i)
            acc[d - k_ + i] = (acc[d - k_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
    Element r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    return r;
}

ExtField::Element ExtField::pow(Element base, std::uint64_t e) const {
    Element result = one();
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

ExtField::Element ExtField::inverse(const Element& a) const {
    if (is_zero(a)) throw DivisionByZeroError("ExtField::inverse: zero element");
    return pow(a, order_ - 2);
}

std::string ExtField::render(const Element& a) const {
    std::string out = "[";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + "]";
}

Curve make_curve(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    if (p < 5 || !is_prime_u32(p))
        throw std::invalid_argument("make_curve: p must be a prime >= 5");
    a %= p;
    b %= p;
    const std::uint64_t disc =
        (4ull * a % p * a % p * a % p + 27ull * b % p * b % p) % p;
    if (disc == 0) throw std::invalid_argument("make_curve: curve is singular");
    return Curve{p, a, b};
}

Curve parse_curve_spec(const std::string& spec) {
    std::uint32_t vals[3] = {0, 0, 0};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = spec.find(',', pos);
        const std::string tok =
            spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("curve spec must be \"p,a,b\"");
        vals[i] = static_cast<std::uint32_t>(std::stoul(tok));
        if (i < 2) {
            if (next == std::string::npos) throw std::invalid_argument("curve spec must be \"p,a,b\"");
            pos = next + 1;
        } else if (next != std::string::npos) {
            throw std::invalid_argument("curve spec must be \"p,a,b\"");
        }
    }
    return make_curve(vals[0], vals[1], vals[2]);
}

CurvePoint make_point(const ExtField& f, ExtField::Element x, ExtField::Element y) {
    CurvePoint pt;
    pt.infinity = false;
    pt.x = std::move(x);
    pt.y = std::move(y);
    pt.p = f.p();
    pt.k = f.degree();
    return pt;
}

bool on_curve(const CurvePoint& pt, const Curve& c, const ExtField& f) {
    if (pt.infinity) return true;
    const auto x3 = f.mul(f.mul(pt.x, pt.x), pt.x);
    const auto rhs = f.add(f.add(x3, f.mul(f.from_base(c.a), pt.x)), f.from_base(c.b));
    return f.mul(pt.y, pt.y) == rhs;
}

bool points_equal(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
}

namespace {

void check_field(const CurvePoint& pt, const ExtField& f, const char* what) {
    if (pt.infinity) return;
    if (pt.p != f.p() || pt.k != f.degree())
        throw FieldMismatchError(std::string(what) + ": point lives over a different extension");
}

}  // namespace

std::uint64_t count_points(const Curve& c, std::uint32_t k) {
    const std::uint64_t n = ipow(c.p, k);
    if (k < 1 || n > kSweepLimit)
        throw SizeLimitError("count_points: p^k exceeds the 3000-element sweep limit");
    const ExtField f(c.p, k);
    std::vector<std::uint32_t> square_count(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto y = f.element_at(i);
        ++square_count[f.index_of(f.mul(y, y))];
    }
    const auto a = f.from_base(c.a), b = f.from_base(c.b);
    std::uint64_t total = 1;  // the point at infinity
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto x = f.element_at(i);
        const auto rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(a, x)), b);
        total += square_count[f.index_of(rhs)];
    }
    return total;
}

BigInt predict_nk(std::uint64_t q, const BigInt& n1, unsigned k) {
    return zeta_family().n_k(k).eval(BigInt(static_cast<unsigned long>(q)), n1);
}

CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q, const Curve& c, const ExtField& f) {
    check_field(P, f, "point_add");
    check_field(Q, f, "point_add");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.x == Q.x && P.y == f.neg(Q.y)) return CurvePoint::at_infinity();
    ExtField::Element lambda;
    if (P.x == Q.x && P.y == Q.y) {
        // tangent: (3x^2 + a) / (2y)
        const auto x2 = f.mul(P.x, P.x);
        const auto num = f.add(f.add(f.add(x2, x2), x2), f.from_base(c.a));
        lambda = f.mul(num, f.inverse(f.add(P.y, P.y)));
    } else {
        lambda = f.mul(f.sub(Q.y, P.y), f.inverse(f.sub(Q.x, P.x)));
    }
    const auto x3 = f.sub(f.sub(f.mul(lambda, lambda), P.x), Q.x);
    const auto y3 = f.sub(f.mul(lambda, f.sub(P.x, x3)), P.y);
    return make_point(f, x3, y3);
}

CurvePoint point_negate(const CurvePoint& P, const ExtField& f) {
    if (P.infinity) return P;
    check_field(P, f, "point_negate");
    return make_point(f, P.x, f.neg(P.y));
}

CurvePoint scalar_mul(const BigInt& n, const CurvePoint& P, const Curve& c, const ExtField& f) {
    check_field(P, f, "scalar_mul");
    if (P.infinity || n == 0) return CurvePoint::at_infinity();
    const CurvePoint base = (n < 0) ? point_negate(P, f) : P;
    BigInt e = abs(n);
    CurvePoint acc = CurvePoint::at_infinity();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = point_add(acc, acc, c, f);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = point_add(acc, base, c, f);
    }
    return acc;
}

CurvePoint frobenius(const CurvePoint& P, const ExtField& f) {
    if (P.infinity) return P;
    check_field(P, f, "frobenius");
    return make_point(f, f.pow(P.x, f.p()), f.pow(P.y, f.p()));
}

std::vector<CurvePoint> enumerate_points(const Curve& c, const ExtField& f) {
    const std::uint64_t n = f.order();
    if (n > kSweepLimit)
        throw SizeLimitError("enumerate_points: field exceeds the 3000-element sweep limit");
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> roots;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto y = f.element_at(i);
        roots[f.index_of(f.mul(y, y))].push_back(i);
    }
    const auto a = f.from_base(c.a), b = f.from_base(c.b);
    std::vector<CurvePoint> points;
    points.push_back(CurvePoint::at_infinity());
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto x = f.element_at(i);
        const auto rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(a, x)), b);
        auto it = roots.find(f.index_of(rhs));
        if (it == roots.end()) continue;
        for (std::uint64_t yi : it->second) points.push_back(make_point(f, x, f.element_at(yi)));
    }
    return points;
}

std::uint64_t endo_kernel_count(const Curve& c, unsigned d) {
    if (d < 1 || ipow(c.p, d) > kSweepLimit)
        throw SizeLimitError("endo_kernel_count: p^d exceeds the 3000-element sweep limit");
    const ExtField f(c.p, d);
    const UnivarPoly cyc = cyc_d(d);
    std::uint64_t kernel = 0;
    for (const CurvePoint& P : enumerate_points(c, f)) {
        // Cyc_d(pi)(P) = sum_i c_i pi^i(P)
        CurvePoint acc = CurvePoint::at_infinity();
        CurvePoint frob = P;
        for (std::size_t i = 0; i < cyc.coeffs().size(); ++i) {
            if (i > 0) frob = frobenius(frob, f);
            const BigInt& coeff = cyc.coeffs()[i];
            if (coeff != 0) acc = point_add(acc, scalar_mul(coeff, frob, c, f), c, f);
        }
        if (acc.infinity) ++kernel;
    }
    return kernel;
}

bool hasse_bound_holds(const Curve& c, std::uint64_t n1) {
    const long long trace = 1ll + c.p - static_cast<long long>(n1);
    return trace * trace <= 4ll * c.p;
}

std::vector<Curve> standard_curve_battery() {
    return {
        make_curve(5, 1, 1),  make_curve(5, 0, 1),  make_curve(5, 1, 2),
        make_curve(7, 1, 1),  make_curve(7, 0, 1),  make_curve(7, 2, 1),
        make_curve(11, 1, 1), make_curve(11, 0, 1), make_curve(11, 3, 5),
        make_curve(13, 1, 1), make_curve(13, 0, 2), make_curve(13, 2, 3),
    };
}

}  // namespace ellcomb
