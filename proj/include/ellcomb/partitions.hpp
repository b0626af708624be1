// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_PARTITIONS_HPP
#define ELLCOMB_PARTITIONS_HPP

#include <functional>
#include <vector>

#include "ellcomb/bigint.hpp"

namespace ellcomb {

// Integer partition of n with weakly decreasing parts.
struct Partition {
    std::vector<unsigned> parts;

    unsigned length() const { return static_cast<unsigned>(parts.size()); }
    unsigned sum() const;
    // d_j = multiplicity of part value j, for j = 1..max part.
    std::vector<unsigned> multiplicities() const;
};

// Enumerates all partitions of n in reverse-lexicographic order, starting
// with (n) and ending with (1,...,1).
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn);

// n / l(lambda) * multinomial(l(lambda); d_1, d_2, ...).  Integral by theorem
// for every partition lambda of n; computed in exact rational form and a
// nonunit denominator is a hard error.
BigInt arrangement_count(unsigned n, const Partition& lambda);

}  // namespace ellcomb

#endif
