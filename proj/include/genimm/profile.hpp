#pragma once

// Combinatorial model of a generic immersion's self-intersection. For each
// depth k in [2, m] the k-fold locus is a submanifold of the target of
// dimension n(m-k+1) - 1, and its resolution is a closed manifold carrying
// a k-fold cover from the source side. Only the quantities the invariants
// read off are stored: the Euler characteristic of the resolution and of
// its cover (even dimensions only), and the component count of the deepest
// locus when it is 1-dimensional (n = 2, k = m). Manifold presentations
// themselves are not modeled.
//
// A self-tangency of depth k performs a Morse modification on the resolved
// k-fold locus. On an even-dimensional manifold that moves chi by exactly
// +-2 (the coorientation makes "+" the larger chi side); on the
// 1-dimensional deepest locus it splits or merges a component.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genimm::profile {

// Dimension of the k-fold self-intersection locus: n(m-k+1) - 1.
inline int stratum_dimension(int n, int m, int k) {
    if (n < 2 || m < 2)
        throw std::invalid_argument("stratum_dimension: n and m must be >= 2");
    if (k < 2 || k > m)
        throw std::invalid_argument("stratum_dimension: k outside [2, m]");
    return n * (m - k + 1) - 1;
}

struct StratumDescriptor {
    int depth = 2;
    int dimension = 0;
    std::optional<long long> chi_resolved;        // chi of the resolved locus
    std::optional<long long> chi_resolved_cover;  // chi of its depth-fold cover
    std::optional<long long> component_count;     // only when dimension == 1

    bool operator==(const StratumDescriptor&) const = default;
};

struct SelfIntersectionProfile {
    int n = 2;
    int m = 2;
    std::map<int, StratumDescriptor> strata;  // one entry per depth in [2, m]

    bool operator==(const SelfIntersectionProfile&) const = default;
};

// The all-zero profile of an embedding; the canonical base point. chi
// fields are populated exactly at even-dimensional strata, the component
// count exactly when the deepest stratum is 1-dimensional.
inline SelfIntersectionProfile embedding_profile(int n, int m) {
    if (n < 2 || m < 2)
        throw std::invalid_argument("embedding_profile: n and m must be >= 2");
    SelfIntersectionProfile p{n, m, {}};
    for (int k = 2; k <= m; ++k) {
        StratumDescriptor s;
        s.depth = k;
        s.dimension = stratum_dimension(n, m, k);
        if (s.dimension % 2 == 0) {
            s.chi_resolved = 0;
            s.chi_resolved_cover = 0;
        }
        if (s.dimension == 1)
            s.component_count = 0;
        p.strata[k] = s;
    }
    return p;
}

// Replace chi at one stratum, keeping the cover at depth * chi.
inline SelfIntersectionProfile with_chi(SelfIntersectionProfile p, int depth, long long chi) {
    auto it = p.strata.find(depth);
    if (it == p.strata.end())
        throw std::invalid_argument("with_chi: depth outside [2, m]");
    if (!it->second.chi_resolved)
        throw std::invalid_argument("with_chi: stratum dimension is odd");
    it->second.chi_resolved = chi;
    it->second.chi_resolved_cover = static_cast<long long>(depth) * chi;
    return p;
}

inline SelfIntersectionProfile with_component_count(SelfIntersectionProfile p, long long count) {
    if (p.n != 2)
        throw std::invalid_argument("with_component_count: deepest stratum is not 1-dimensional");
    if (count < 0)
        throw std::invalid_argument("with_component_count: count must be >= 0");
    p.strata.at(p.m).component_count = count;
    return p;
}

// The J-values a profile determines: J_r = chi of the resolved r-fold locus
// at each admissible r, and J = component count of the deepest locus when
// n = 2.
struct JEvaluation {
    std::map<int, long long> j_values;
    std::optional<long long> j_count;

    bool operator==(const JEvaluation&) const = default;
};

inline JEvaluation evaluate_J(const SelfIntersectionProfile& p) {
    JEvaluation out;
    for (const auto& [k, s] : p.strata) {
        const bool admissible = p.n % 2 == 1 && (p.m - k) % 2 == 0;
        if (admissible) {
            if (!s.chi_resolved)
                throw std::invalid_argument("evaluate_J: missing chi at admissible depth " +
                                            std::to_string(k));
            out.j_values[k] = *s.chi_resolved;
        }
    }
    if (p.n == 2) {
        const auto& deepest = p.strata.at(p.m);
        if (!deepest.component_count)
            throw std::invalid_argument("evaluate_J: missing component count at depth m");
        out.j_count = *deepest.component_count;
    }
    return out;
}

// Morse modification of the resolved locus at the given depth: chi moves by
// +-2, the cover by depth times as much, nothing else changes.
inline SelfIntersectionProfile apply_morse_modification(SelfIntersectionProfile p, int depth,
                                                        int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("apply_morse_modification: sign must be +1 or -1");
    auto it = p.strata.find(depth);
    if (it == p.strata.end())
        throw std::invalid_argument("apply_morse_modification: depth outside [2, m]");
    if (it->second.dimension % 2 != 0)
        throw std::invalid_argument("apply_morse_modification: stratum dimension is odd");
    *it->second.chi_resolved += 2LL * sign;
    *it->second.chi_resolved_cover += 2LL * sign * depth;
    return p;
}

// Morse modification of the 1-dimensional deepest locus: the component
// count moves by +-1 and can never drop below zero.
inline SelfIntersectionProfile apply_component_modification(SelfIntersectionProfile p, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("apply_component_modification: sign must be +1 or -1");
    if (p.n != 2)
        throw std::invalid_argument("apply_component_modification: requires n = 2");
    auto& deepest = p.strata.at(p.m);
    if (!deepest.component_count)
        throw std::invalid_argument("apply_component_modification: missing component count");
    if (*deepest.component_count + sign < 0)
        throw std::invalid_argument("apply_component_modification: component count would go negative");
    *deepest.component_count += sign;
    return p;
}

// Self-intersections of a disjoint union: chi and component counts add
// stratum-wise. The embedding profile is the identity.
inline SelfIntersectionProfile disjoint_union(const SelfIntersectionProfile& a,
                                              const SelfIntersectionProfile& b) {
    if (a.n != b.n || a.m != b.m)
        throw std::invalid_argument("disjoint_union: dimension mismatch");
    SelfIntersectionProfile out = a;
    for (auto& [k, s] : out.strata) {
        const auto& t = b.strata.at(k);
        if (s.chi_resolved && t.chi_resolved) {
            *s.chi_resolved += *t.chi_resolved;
            *s.chi_resolved_cover += *t.chi_resolved_cover;
        }
        if (s.component_count && t.component_count)
            *s.component_count += *t.component_count;
    }
    return out;
}

// For every depth, stratum dimension parity must agree with admissibility
// of J: the dimension n(m-r+1)-1 is even exactly when n is odd and m-r is
// even.
struct ParityAuditRow {
    int depth = 2;
    int dimension = 0;
    bool dimension_even = false;
    bool admissible = false;
    bool consistent = false;  // dimension_even == admissible

    bool operator==(const ParityAuditRow&) const = default;
};

struct ParityAuditReport {
    int n = 2;
    int m = 2;
    std::vector<ParityAuditRow> rows;
    bool all_consistent = true;

    bool operator==(const ParityAuditReport&) const = default;
};

inline ParityAuditReport parity_audit(int n, int m) {
    if (n < 2 || m < 2)
        throw std::invalid_argument("parity_audit: n and m must be >= 2");
    ParityAuditReport rep{n, m, {}, true};
    for (int r = 2; r <= m; ++r) {
        ParityAuditRow row;
        row.depth = r;
        row.dimension = stratum_dimension(n, m, r);
        row.dimension_even = row.dimension % 2 == 0;
        row.admissible = n % 2 == 1 && (m - r) % 2 == 0;
        row.consistent = row.dimension_even == row.admissible;
        rep.all_consistent = rep.all_consistent && row.consistent;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace genimm::profile
