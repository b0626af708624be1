// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_QT_COMBINATORICS_HPP
#define ELLCOMB_QT_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ellcomb/bivar_poly.hpp"

namespace ellcomb {

// Subset of {1..n} with no two elements circularly consecutive
// (x in S implies (x mod n)+1 not in S; for n = 1 the only subset is empty).
class CircularSubset {
  public:
    CircularSubset(unsigned n, const std::vector<unsigned>& members);
    static CircularSubset from_mask(unsigned n, std::uint64_t mask);

    unsigned ground_size() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    unsigned size() const;
    unsigned even_count() const;
    std::vector<unsigned> members() const;

  private:
    CircularSubset(unsigned n, std::uint64_t mask);
    unsigned n_;
    std::uint64_t mask_;
};

// Subset of {1..m} with no two elements linearly consecutive; the endpoints
// 1 and m may co-occur.
class LinearSubset {
  public:
    LinearSubset(unsigned m, const std::vector<unsigned>& members);
    static LinearSubset from_mask(unsigned m, std::uint64_t mask);

    unsigned ground_size() const { return m_; }
    std::uint64_t mask() const { return mask_; }
    unsigned size() const;
    unsigned even_count() const;

  private:
    LinearSubset(unsigned m, std::uint64_t mask);
    unsigned m_;
    std::uint64_t mask_;
};

// Spanning tree of the wheel W_n (hub w_0 plus rim w_1..w_n).  Rim edge i is
// the clockwise edge w_i -> w_{(i mod n)+1}; for n = 2 the two rim edges are
// distinct parallel edges (doubled rim).  Bit i-1 of each mask refers to
// spoke i / rim edge i.
struct WheelTree {
    unsigned rim_size = 0;
    std::uint32_t spokes = 0;
    std::uint32_t rim_edges = 0;

    friend bool operator==(const WheelTree&, const WheelTree&) = default;
};

// Union-find validation of the WheelTree invariants (n edges, acyclic,
// connected); throws NotATreeError when violated.
WheelTree make_wheel_tree(unsigned n, std::uint32_t spokes, std::uint32_t rim_edges);
bool is_spanning_tree(unsigned n, std::uint32_t spokes, std::uint32_t rim_edges);

unsigned spoke_count(const WheelTree& t);
// Sum over rim arcs of the clockwise edge count from the arc's spoke vertex
// to the arc's tail (its clockwise-last vertex).
unsigned spoke_tail_distance_sum(const WheelTree& t);

// Enumeration of the valid subsets only (counts grow like Lucas/Fibonacci
// numbers, not 2^n); element e corresponds to mask bit e-1.
void for_each_circular_subset(unsigned n, const std::function<void(std::uint64_t)>& fn);
void for_each_linear_subset(unsigned m, const std::function<void(std::uint64_t)>& fn);

// (q,t)-Lucas polynomial: sum over circular subsets of {1..n} of
// q^{#even in S} v^{floor(n/2) - #S}.  SizeLimit beyond n = 30.
BivarPoly lucas_qt(unsigned n);
// Twisted weighting v^{#S} on the same index set.
BivarPoly lucas_twisted(unsigned n);

// (q,t)-Fibonacci polynomial: sum over linear subsets of {1..k-1} of
// q^{#even} v^{ceil(k/2) - #S}.  SizeLimit beyond k = 31.
BivarPoly fib_qt(unsigned k);
// Twisted weighting v^{#S}.
BivarPoly fib_twisted(unsigned k);
// Same index set with q counting ODD elements.  Needed alongside
// fib_twisted for the refined necklace-decomposition identity: cutting a
// necklace open at bead 1 relabels beads 2..m to 1..m-1 and flips parity.
BivarPoly fib_twisted_odd(unsigned k);

// Spanning-tree generating polynomial of W_n by direct enumeration
// (2 <= n <= 12); q tracks total spoke-tail distance, v the spoke count.
BivarPoly wheel_poly_enum(unsigned n);
// The same polynomial from the partition-indexed closed form (any n >= 1).
BivarPoly wheel_poly_partition(unsigned n);

std::vector<WheelTree> all_spanning_trees(unsigned n);

// The subset -> spanning tree bijection: spoke at w_i iff neither 2i-2 nor
// 2i-1 lies in S (indices mod 2n), rim edge i iff 2i-1 or 2i lies in S.
// Requires #S <= n-1 (the all-odd and all-even n-subsets are excluded);
// violations throw NotATreeError.
WheelTree subset_to_tree(const CircularSubset& s, unsigned n);

// Counts of circular subsets of {1..2k} and linear subsets of {1..2k-2}
// having exactly k-i-j odd and j even elements.  The caller checks
// count_circular * i == k * count_linear.
std::pair<std::uint64_t, std::uint64_t> c_ij_check(unsigned k, unsigned i, unsigned j);

}  // namespace ellcomb

#endif
