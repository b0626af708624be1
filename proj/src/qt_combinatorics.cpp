// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/qt_combinatorics.hpp"

#include <bit>
#include <stdexcept>

#include "ellcomb/errors.hpp"
#include "ellcomb/partitions.hpp"
#include "ellcomb/point_counts.hpp"

namespace ellcomb {

namespace {

constexpr unsigned kSubsetLimit = 30;   // lucas ground sets
constexpr unsigned kFibLimit = 31;      // fib index (ground set k-1)
constexpr unsigned kTreeLimitLo = 2;
constexpr unsigned kTreeLimitHi = 12;

std::uint64_t even_element_mask(unsigned n) {
    // element e is even  <=>  bit e-1 with odd index
    std::uint64_t m = 0;
    for (unsigned e = 2; e <= n; e += 2) m |= std::uint64_t(1) << (e - 1);
    return m;
}

bool circular_ok(unsigned n, std::uint64_t mask) {
    if (n == 0) return mask == 0;
    if (mask >> n) return false;
    for (unsigned e = 1; e <= n; ++e) {
        if (mask >> (e - 1) & 1) {
            unsigned succ = (e % n) + 1;
            if (mask >> (succ - 1) & 1) return false;
        }
    }
    return true;
}

bool linear_ok(unsigned m, std::uint64_t mask) {
    if (m == 0) return mask == 0;
    if (mask >> m) return false;
    return (mask & (mask >> 1)) == 0;
}

std::uint64_t mask_from_members(unsigned n, const std::vector<unsigned>& members) {
    std::uint64_t mask = 0;
    for (unsigned e : members) {
        if (e < 1 || e > n) throw std::invalid_argument("subset element out of range");
        mask |= std::uint64_t(1) << (e - 1);
    }
    return mask;
}

std::vector<unsigned> members_from_mask(unsigned n, std::uint64_t mask) {
    std::vector<unsigned> out;
    for (unsigned e = 1; e <= n; ++e)
        if (mask >> (e - 1) & 1) out.push_back(e);
    return out;
}

// Valid linear subsets over positions lo..hi (inclusive; empty when lo > hi).
void linear_rec(unsigned lo, unsigned hi, std::uint64_t mask,
                const std::function<void(std::uint64_t)>& fn) {
    if (lo > hi) {
        fn(mask);
        return;
    }
    linear_rec(lo + 1, hi, mask, fn);
    // taking lo forbids lo+1
    linear_rec(lo + 2, hi, mask | (std::uint64_t(1) << (lo - 1)), fn);
}

}  // namespace

CircularSubset::CircularSubset(unsigned n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 1 || n > 63) throw std::invalid_argument("CircularSubset: ground size out of range");
    if (!circular_ok(n, mask))
        throw std::invalid_argument("CircularSubset: circularly consecutive elements");
}

CircularSubset::CircularSubset(unsigned n, const std::vector<unsigned>& members)
    : CircularSubset(n, mask_from_members(n, members)) {}

CircularSubset CircularSubset::from_mask(unsigned n, std::uint64_t mask) {
    return CircularSubset(n, mask);
}

unsigned CircularSubset::size() const { return std::popcount(mask_); }
unsigned CircularSubset::even_count() const { return std::popcount(mask_ & even_element_mask(n_)); }
std::vector<unsigned> CircularSubset::members() const { return members_from_mask(n_, mask_); }

LinearSubset::LinearSubset(unsigned m, std::uint64_t mask) : m_(m), mask_(mask) {
    if (m > 63) throw std::invalid_argument("LinearSubset: ground size out of range");
    if (!linear_ok(m, mask))
        throw std::invalid_argument("LinearSubset: linearly consecutive elements");
}

LinearSubset::LinearSubset(unsigned m, const std::vector<unsigned>& members)
    : LinearSubset(m, mask_from_members(m, members)) {}

LinearSubset LinearSubset::from_mask(unsigned m, std::uint64_t mask) {
    return LinearSubset(m, mask);
}

unsigned LinearSubset::size() const { return std::popcount(mask_); }
unsigned LinearSubset::even_count() const { return std::popcount(mask_ & even_element_mask(m_)); }

void for_each_circular_subset(unsigned n, const std::function<void(std::uint64_t)>& fn) {
    if (n == 0) {
        fn(0);
        return;
    }
    // Element 1 out: linear choice over 2..n.
    linear_rec(2, n, 0, fn);
    // Element 1 in: forbids 2 and n; linear choice over 3..n-1.
    if (n >= 2) linear_rec(3, n - 1, 1, fn);
}

void for_each_linear_subset(unsigned m, const std::function<void(std::uint64_t)>& fn) {
    linear_rec(1, m, 0, fn);
}

BivarPoly lucas_qt(unsigned n) {
    if (n < 1) throw IndexError("lucas_qt: n must be >= 1");
    if (n > kSubsetLimit) throw SizeLimitError("lucas_qt: ground set larger than 30");
    const std::uint64_t evens = even_element_mask(n);
    BivarPoly total;
    for_each_circular_subset(n, [&](std::uint64_t mask) {
        const unsigned sz = std::popcount(mask);
        const unsigned ev = std::popcount(mask & evens);
        total.add_term(Monomial{ev, n / 2 - sz}, 1);
    });
    return total;
}

BivarPoly lucas_twisted(unsigned n) {
    if (n < 1) throw IndexError("lucas_twisted: n must be >= 1");
    if (n > kSubsetLimit) throw SizeLimitError("lucas_twisted: ground set larger than 30");
    const std::uint64_t evens = even_element_mask(n);
    BivarPoly total;
    for_each_circular_subset(n, [&](std::uint64_t mask) {
        total.add_term(Monomial{static_cast<std::uint32_t>(std::popcount(mask & evens)),
                                static_cast<std::uint32_t>(std::popcount(mask))}, 1);
    });
    return total;
}

namespace {

BivarPoly fib_family(unsigned k, bool twisted, bool odd_weight, const char* name) {
    if (k < 1) throw IndexError(std::string(name) + ": k must be >= 1");
    if (k > kFibLimit) throw SizeLimitError(std::string(name) + ": ground set larger than 30");
    const unsigned m = k - 1;
    const std::uint64_t evens = even_element_mask(m);
    const unsigned half_up = (k + 1) / 2;
    BivarPoly total;
    for_each_linear_subset(m, [&](std::uint64_t mask) {
        const unsigned sz = std::popcount(mask);
        unsigned w = odd_weight ? sz - std::popcount(mask & evens)
                                : static_cast<unsigned>(std::popcount(mask & evens));
        total.add_term(Monomial{w, twisted ? sz : half_up - sz}, 1);
    });
    return total;
}

}  // namespace

BivarPoly fib_qt(unsigned k) { return fib_family(k, false, false, "fib_qt"); }
BivarPoly fib_twisted(unsigned k) { return fib_family(k, true, false, "fib_twisted"); }
BivarPoly fib_twisted_odd(unsigned k) { return fib_family(k, true, true, "fib_twisted_odd"); }

bool is_spanning_tree(unsigned n, std::uint32_t spokes, std::uint32_t rim_edges) {
    if (n < 2 || n > 31) return false;
    if (std::popcount(spokes) + std::popcount(rim_edges) != static_cast<int>(n)) return false;
    // union-find over hub (0) and rim (1..n); parallel rim edges for n = 2
    // are distinct and correctly collide here.
    unsigned parent[33];
    for (unsigned i = 0; i <= n; ++i) parent[i] = i;
    auto find = [&](unsigned a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto join = [&](unsigned a, unsigned b) {
        unsigned ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    };
    for (unsigned i = 1; i <= n; ++i)
        if (spokes >> (i - 1) & 1)
            if (!join(0, i)) return false;
    for (unsigned i = 1; i <= n; ++i)
        if (rim_edges >> (i - 1) & 1)
            if (!join(i, i % n + 1)) return false;
    // n edges and no cycle on n+1 vertices forces connectivity.
    return true;
}

WheelTree make_wheel_tree(unsigned n, std::uint32_t spokes, std::uint32_t rim_edges) {
    if (!is_spanning_tree(n, spokes, rim_edges))
        throw NotATreeError("make_wheel_tree: edge set is not a spanning tree of W_n");
    return WheelTree{n, spokes, rim_edges};
}

unsigned spoke_count(const WheelTree& t) { return std::popcount(t.spokes); }

unsigned spoke_tail_distance_sum(const WheelTree& t) {
    const unsigned n = t.rim_size;
    if (t.rim_edges == 0) return 0;
    unsigned total = 0;
    for (unsigned e = 1; e <= n; ++e) {
        if (!(t.rim_edges >> (e - 1) & 1)) continue;
        const unsigned prev = (e + n - 2) % n + 1;
        if (t.rim_edges >> (prev - 1) & 1) continue;  // not a run start
        // Arc vertices, clockwise: w_e, w_{e+1}, ..., ending after the run.
        unsigned len = 0;
        unsigned cur = e;
        while (t.rim_edges >> (cur - 1) & 1) {
            ++len;
            cur = cur % n + 1;
        }
        // Vertices are w_e .. w_{e+len (mod n)}; the tail is the last one.
        int spoke_pos = -1;
        for (unsigned off = 0; off <= len; ++off) {
            const unsigned w = (e - 1 + off) % n + 1;
            if (t.spokes >> (w - 1) & 1) {
                spoke_pos = static_cast<int>(off);
                break;
            }
        }
        if (spoke_pos < 0)
            throw NotATreeError("spoke_tail_distance_sum: arc without a spoke");
        total += len - static_cast<unsigned>(spoke_pos);
    }
    return total;
}

std::vector<WheelTree> all_spanning_trees(unsigned n) {
    if (n < kTreeLimitLo || n > kTreeLimitHi)
        throw SizeLimitError("all_spanning_trees: supported range is 2..12");
    std::vector<WheelTree> trees;
    const std::uint32_t top = std::uint32_t(1) << n;
    for (std::uint32_t s = 0; s < top; ++s) {
        const int sc = std::popcount(s);
        for (std::uint32_t r = 0; r < top; ++r) {
            if (sc + std::popcount(r) != static_cast<int>(n)) continue;
            if (is_spanning_tree(n, s, r)) trees.push_back(WheelTree{n, s, r});
        }
    }
    return trees;
}

BivarPoly wheel_poly_enum(unsigned n) {
    BivarPoly total;
    for (const WheelTree& t : all_spanning_trees(n))
        total.add_term(Monomial{spoke_tail_distance_sum(t), spoke_count(t)}, 1);
    return total;
}

BivarPoly wheel_poly_partition(unsigned n) {
    if (n < 1) throw IndexError("wheel_poly_partition: n must be >= 1");
    BivarPoly total;
    for_each_partition(n, [&](const Partition& lam) {
        BivarPoly term = BivarPoly::constant(arrangement_count(n, lam));
        for (unsigned part : lam.parts) {
            BivarPoly geo;
            for (unsigned j = 0; j < part; ++j) geo.add_term(Monomial{j, 0}, 1);
            term *= geo;
        }
        term *= BivarPoly::monomial(1, 0, lam.length());
        total += term;
    });
    return total;
}

WheelTree subset_to_tree(const CircularSubset& s, unsigned n) {
    if (s.ground_size() != 2 * n)
        throw std::invalid_argument("subset_to_tree: subset must live on 2n elements");
    if (s.size() > n - 1)
        throw NotATreeError("subset_to_tree: all-odd/all-even subsets are excluded");
    const std::uint64_t mask = s.mask();
    auto in_s = [&](unsigned e) {
        // element 0 is identified with element 2n
        const unsigned idx = (e + 2 * n - 1) % (2 * n);
        return (mask >> idx & 1) != 0;
    };
    std::uint32_t spokes = 0, rim = 0;
    for (unsigned i = 1; i <= n; ++i) {
        if (!in_s(2 * i - 2) && !in_s(2 * i - 1)) spokes |= std::uint32_t(1) << (i - 1);
        if (in_s(2 * i - 1) || in_s(2 * i)) rim |= std::uint32_t(1) << (i - 1);
    }
    return make_wheel_tree(n, spokes, rim);
}

std::pair<std::uint64_t, std::uint64_t> c_ij_check(unsigned k, unsigned i, unsigned j) {
    if (k < 1 || k > 12) throw SizeLimitError("c_ij_check: supported range is k <= 12");
    if (i < 1 || i > k || j > i) throw IndexError("c_ij_check: require 1 <= i <= k, 0 <= j <= i");
    if (k < i + j) return {0, 0};
    const unsigned odd_needed = k - i - j;
    std::uint64_t circ = 0, lin = 0;
    const std::uint64_t evens_c = even_element_mask(2 * k);
    for_each_circular_subset(2 * k, [&](std::uint64_t mask) {
        const unsigned ev = std::popcount(mask & evens_c);
        const unsigned od = std::popcount(mask) - ev;
        if (ev == j && od == odd_needed) ++circ;
    });
    const std::uint64_t evens_l = even_element_mask(2 * k - 2);
    for_each_linear_subset(2 * k - 2, [&](std::uint64_t mask) {
        const unsigned ev = std::popcount(mask & evens_l);
        const unsigned od = std::popcount(mask) - ev;
        if (ev == j && od == odd_needed) ++lin;
    });
    return {circ, lin};
}

}  // namespace ellcomb
