#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths.

#include "genimm/rational.hpp"

#include <vector>

namespace oracles {

using genimm::numthy::BigInt;
using genimm::numthy::BigRational;

// Bernoulli number B_i via the Akiyama-Tanigawa transform, a different
// exact algorithm from the binomial-sum recurrence used by the library.
// The transform natively produces B_1 = +1/2; we flip that one entry to the
// modern convention.
inline BigRational bernoulli_akiyama_tanigawa(int i) {
    if (i == 1)
        return BigRational(-1) / BigRational(2);
    std::vector<BigRational> row;
    row.reserve(i + 1);
    for (int k = 0; k <= i; ++k)
        row.emplace_back(BigRational(1) / BigRational(k + 1));
    // ascending k so each update reads the previous row's entries
    for (int step = 1; step <= i; ++step)
        for (int k = 0; k <= i - step; ++k)
            row[k] = BigRational(k + 1) * (row[k] - row[k + 1]);
    return row[0];
}

inline bool is_prime_small(long n) {
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// The denominator of B_{2j}: the product of all primes p with (p-1) | 2j.
inline BigInt von_staudt_clausen_denominator(int j) {
    BigInt denom = 1;
    for (long p = 2; p <= 2L * j + 1; ++p)
        if (is_prime_small(p) && (2L * j) % (p - 1) == 0)
            denom *= p;
    return denom;
}

// C(n, k) by the Pascal walk, exact.
inline BigInt binomial(int n, int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

}  // namespace oracles
