#pragma once

// Range constraints on the linking invariant L of generic immersions of
// spheres in codimension two, S^{2m-1} -> R^{2m+1}.
//
// Regular homotopy classes of such immersions form the group
// pi_{2m-1}(V_{2m+1,2m-1}), which Bott periodicity pins down to Z, Z_2 or 0
// depending on m mod 4 (imm_group below). The residue l = L mod (m+1) is a
// homomorphism out of that group, and embeddings lie in its kernel; for
// m = 2j the embeddings sit inside Z with index mu(j), the denominator of
// B_j/(4j). Chasing orders through those groups forces a divisor D on every
// attainable value of L:
//
//   m = 4j+1:  D = 2j+1
//   m = 4j+3:  D = 4j+4
//   m = 2j:    D = prod over primes p of p^r, where r is the largest integer
//              admitting k >= 0 with p^(r+k) | 2j+1 and p^(k+1) not | mu_j
//
// Conversely (m+1)Z is always attained, so the true range of L is squeezed
// between (m+1)Z and DZ. l_range reports both ends and whether they meet.

#include "genimm/bernoulli.hpp"
#include "genimm/factorization.hpp"

#include <stdexcept>
#include <string>

namespace genimm::numthy {

enum class GroupKind { InfiniteCyclic, CyclicOfOrder, Trivial };

struct GroupDescriptor {
    GroupKind kind = GroupKind::Trivial;
    int order = 0;  // >= 2 when kind == CyclicOfOrder, otherwise 0

    static GroupDescriptor infinite_cyclic() { return {GroupKind::InfiniteCyclic, 0}; }
    static GroupDescriptor cyclic_of_order(int t) {
        if (t < 2)
            throw std::domain_error("GroupDescriptor: cyclic order must be >= 2");
        return {GroupKind::CyclicOfOrder, t};
    }
    static GroupDescriptor trivial() { return {GroupKind::Trivial, 0}; }

    std::string str() const {
        switch (kind) {
            case GroupKind::InfiniteCyclic: return "Z";
            case GroupKind::CyclicOfOrder: return "Z/" + std::to_string(order);
            case GroupKind::Trivial: return "0";
        }
        return "?";
    }

    bool operator==(const GroupDescriptor&) const = default;
};

// pi_{2m-1}(V_{2m+1,2m-1}): the group of regular homotopy classes of
// immersions S^{2m-1} -> R^{2m+1}. Depends only on m mod 4, with both even
// residues giving Z.
inline GroupDescriptor imm_group(int m) {
    if (m < 2)
        throw std::domain_error("imm_group: m must be >= 2");
    if (m % 2 == 0)
        return GroupDescriptor::infinite_cyclic();
    if (m % 4 == 1)
        return GroupDescriptor::cyclic_of_order(2);
    return GroupDescriptor::trivial();
}

// Denominator of bernoulli_top(j)/(4j) in lowest terms.
// mu(1) = 24, mu(17) = 24, mu(27) = 86184.
inline BigInt mu(int j) {
    if (j < 1)
        throw std::domain_error("mu: j must be >= 1");
    return (bernoulli_top(j) / BigRational(4LL * j)).den();
}

// Index of the subgroup of classes containing embeddings inside
// Imm(4j-1, 2) = Z. Equals mu(j).
inline BigInt embedding_index(int j) { return mu(j); }

namespace detail {
inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}
}  // namespace detail

// The largest divisor D that the three congruence cases above force on L(f)
// for every generic immersion S^{2m-1} -> R^{2m+1}. For even m the exponent
// of p is the closed form max(0, v_p(2j+1) - v_p(mu_j)).
inline long long l_divisor(int m) {
    if (m < 2)
        throw std::domain_error("l_divisor: m must be >= 2");
    if (m % 4 == 1)
        return (m + 1) / 2;
    if (m % 4 == 3)
        return m + 1;
    const int j = m / 2;
    const BigInt muj = mu(j);
    BigInt d = 1;
    for (const auto& [p, a] : factorize(BigInt(2L * j + 1)).factors) {
        const int drop = p_adic_valuation(muj, p);
        if (a > drop)
            d *= detail::pow_int(p, static_cast<unsigned long>(a - drop));
    }
    return d.get_si();
}

// Independent route to the same divisor: for even m, enumerate all
// (p, r, k) triples with k <= k_bound directly against the defining
// divisibility conditions instead of using valuations. k_bound must be at
// least v_p(2j+1) + v_p(mu_j) for every relevant p; 64 is safe far beyond
// desk scale.
inline long long l_divisor_bruteforce(int m, int k_bound) {
    if (m < 2)
        throw std::domain_error("l_divisor_bruteforce: m must be >= 2");
    if (k_bound < 0)
        throw std::domain_error("l_divisor_bruteforce: k_bound must be >= 0");
    if (m % 4 == 1)
        return (m + 1) / 2;
    if (m % 4 == 3)
        return m + 1;
    const int j = m / 2;
    const BigInt q = 2L * j + 1;
    const BigInt muj = mu(j);
    BigInt d = 1;
    for (BigInt p = 2; p <= q; ++p) {
        if (!is_prime(p))
            continue;
        int best_r = 0;
        for (int r = 1; detail::pow_int(p, r) <= q; ++r) {
            bool witnessed = false;
            for (int k = 0; k <= k_bound && !witnessed; ++k) {
                const BigInt prk = detail::pow_int(p, r + k);
                const BigInt pk1 = detail::pow_int(p, k + 1);
                if (mpz_divisible_p(q.get_mpz_t(), prk.get_mpz_t()) &&
                    !mpz_divisible_p(muj.get_mpz_t(), pk1.get_mpz_t()))
                    witnessed = true;
            }
            if (witnessed)
                best_r = r;
        }
        if (best_r > 0)
            d *= detail::pow_int(p, best_r);
    }
    return d.get_si();
}

// Two-sided report on the range of L: every attainable value is a multiple
// of `divisor`, and every multiple of `realizable_subgroup` = m+1 is
// attained. `exact` only when the two bounds meet; when they do not, the
// true range lies somewhere between and is not settled here.
struct LRangeReport {
    int m = 2;
    long long divisor = 1;
    long long realizable_subgroup = 3;
    bool exact = false;

    bool operator==(const LRangeReport&) const = default;
};

inline LRangeReport l_range(int m) {
    const long long d = l_divisor(m);
    return {m, d, static_cast<long long>(m) + 1, d == static_cast<long long>(m) + 1};
}

// True iff no prime factor of 2j+1 divides mu_j; in that case the divisor
// for m = 2j is the full 2j+1 and the range of L is exactly (2j+1)Z.
inline bool is_l_trivial(int j) {
    if (j < 1)
        throw std::domain_error("is_l_trivial: j must be >= 1");
    const BigInt muj = mu(j);
    for (const auto& [p, e] : factorize(BigInt(2L * j + 1)).factors)
        if (mpz_divisible_p(muj.get_mpz_t(), p.get_mpz_t()))
            return false;
    return true;
}

}  // namespace genimm::numthy
