#pragma once

#include "genimm/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genimm::numthy {

// Exact for word-sized inputs; beyond that GMP runs Baillie-PSW plus
// Miller-Rabin rounds, which has no known composite passing it.
inline bool is_prime(const BigInt& n) {
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Prime factorization as (prime, exponent) pairs with strictly increasing
// primes and all exponents >= 1. The empty list factors 1.
struct Factorization {
    std::vector<std::pair<BigInt, int>> factors;

    BigInt value() const {
        BigInt v = 1;
        for (const auto& [p, e] : factors)
            for (int i = 0; i < e; ++i)
                v *= p;
        return v;
    }

    int exponent_of(const BigInt& p) const {
        for (const auto& [q, e] : factors)
            if (q == p)
                return e;
        return 0;
    }

    // "2^3·3^4·7·19"; "1" for the empty factorization.
    std::string str() const {
        if (factors.empty())
            return "1";
        std::string out;
        for (const auto& [p, e] : factors) {
            if (!out.empty())
                out += "·";
            out += p.get_str();
            if (e > 1)
                out += "^" + std::to_string(e);
        }
        return out;
    }

    bool operator==(const Factorization&) const = default;
};

// Trial division with a 2,3-wheel; intended for desk-scale inputs.
inline Factorization factorize(const BigInt& n) {
    if (n < 1)
        throw std::domain_error("factorize: n must be >= 1");
    Factorization out;
    BigInt rest = n;
    auto strip = [&](const BigInt& p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    BigInt cand = 5;
    int step = 2;  // candidates 5, 7, 11, 13, ... (6k +- 1)
    while (cand * cand <= rest) {
        strip(cand);
        cand += step;
        step = 6 - step;
    }
    if (rest > 1)
        out.factors.emplace_back(rest, 1);
    return out;
}

// Largest e with p^e | n. Rejects non-prime p.
inline int p_adic_valuation(const BigInt& n, const BigInt& p) {
    if (n < 1)
        throw std::domain_error("p_adic_valuation: n must be >= 1");
    if (!is_prime(p))
        throw std::domain_error("p_adic_valuation: " + p.get_str() + " is not prime");
    BigInt reduced;
    return static_cast<int>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace genimm::numthy
