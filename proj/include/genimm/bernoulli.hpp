#pragma once

// Exact Bernoulli numbers, in both indexing conventions:
//
//   bernoulli_modern(i)  B_0 = 1, B_1 = -1/2, B_2 = 1/6, zero at odd i > 1.
//   bernoulli_top(j)     the positive rational |bernoulli_modern(2j)|, so
//                        bernoulli_top(1) = 1/6, bernoulli_top(2) = 1/30.
//
// The second convention is the one in which mu(j), the denominator of
// bernoulli_top(j)/(4j) in lowest terms, takes the values 24, ..., 86184, ...
// Everything downstream of the divisibility theory indexes Bernoulli numbers
// this way; callers coming from the modern convention must halve the index.

#include "genimm/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace genimm::numthy {

// B_i in the modern convention, from the recurrence
//   sum_{k=0}^{i} C(i+1, k) B_k = 0,  B_0 = 1.
// The table is memoized behind a lock, so concurrent callers are safe.
inline BigRational bernoulli_modern(int i) {
    if (i < 0)
        throw std::domain_error("bernoulli_modern: index must be >= 0");
    static std::mutex guard;
    static std::vector<BigRational> cache{BigRational(1)};
    std::lock_guard<std::mutex> lock(guard);
    while (static_cast<int>(cache.size()) <= i) {
        const int n = static_cast<int>(cache.size());
        BigInt binom = 1;  // walks C(n+1, k)
        BigRational sum(0);
        for (int k = 0; k < n; ++k) {
            sum = sum + BigRational(binom) * cache[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        cache.push_back(sum / BigRational(-(n + 1)));
    }
    return cache[i];
}

inline BigRational bernoulli_top(int j) {
    if (j < 1)
        throw std::domain_error("bernoulli_top: index must be >= 1");
    return bernoulli_modern(2 * j).abs();
}

}  // namespace genimm::numthy
