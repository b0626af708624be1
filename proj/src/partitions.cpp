// SPDX-License-Identifier: Apache-2.0
#include "ellcomb/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace ellcomb {

unsigned Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::vector<unsigned> Partition::multiplicities() const {
    std::vector<unsigned> d(parts.empty() ? 0 : parts.front(), 0u);
    for (unsigned p : parts) ++d[p - 1];
    return d;
}

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition{});
        return;
    }
    Partition lam;
    lam.parts = {n};
    while (true) {
        fn(lam);
        // Descent step: decrement the last part that exceeds 1 and greedily
        // refill the tail, giving the reverse-lexicographic successor.
        std::size_t i = lam.parts.size();
        while (i > 0 && lam.parts[i - 1] == 1) --i;
        if (i == 0) break;
        unsigned rem = 0;
        for (std::size_t j = i - 1; j < lam.parts.size(); ++j) rem += lam.parts[j];
        unsigned cap = lam.parts[i - 1] - 1;
        lam.parts.resize(i - 1);
        while (rem > 0) {
            unsigned part = std::min(cap, rem);
            lam.parts.push_back(part);
            rem -= part;
        }
    }
}

BigInt arrangement_count(unsigned n, const Partition& lambda) {
    const unsigned l = lambda.length();
    if (l == 0) throw std::invalid_argument("arrangement_count: empty partition");
    BigRat value(BigInt(n) * multinomial(l, lambda.multiplicities()), BigInt(l));
    value.canonicalize();
    if (value.get_den() != 1)
        throw std::logic_error("arrangement_count: prefactor is not an integer");
    return value.get_num();
}

}  // namespace ellcomb
