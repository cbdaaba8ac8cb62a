#pragma once

// Jump calculus for the first order invariants J_r, J, Lambda and L of
// generic immersions M^{nm-1} -> W^{n(m+1)-1}, m, n > 1.
//
// A generic path in the space of immersions crosses the codimension-1
// discriminant at isolated events. Each crossing is a StrataEvent: either a
// self-tangency (one degenerate k-fold self-intersection point, 2 <= k <= m)
// or an (m+1)-fold self-intersection point. Crossing to the positive side
// (sign +1, fixed by the coorientation of the discriminant) changes the
// invariants by these jumps and nothing else:
//
//   self-tangency, depth k:   J_k += 2 when k is an admissible index;
//                             J   += 1 when n = 2 and k = m;
//                             Lambda and L are unchanged.
//   (m+1)-fold point:         L   += m+1;
//                             Lambda += 1 in Z_2 when m is even;
//                             every J_r and J unchanged.
//
// The calculus tracks differences of invariants along paths; normalizing at
// a base point (zero_state, the state of an embedding) is the caller's
// business. The residues l = L mod (m+1), lambda = Lambda (m odd) and
// j_r = J_r mod 2 are unchanged by every event, which makes them invariants
// of full regular homotopy.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genimm::calculus {

enum class Target { Euclidean, GeneralManifold };

// Dimensions and condition flags of an immersion M^{nm-1} -> W^{n(m+1)-1}.
//   cond_lambda    (C-Lambda): H_{n-1}(M; Z_2) = 0 = H_n(M; Z_2)
//   cond_l         (C-L):      H_{n-1}(M; Z)   = 0 = H_n(M; Z)
//   tor_condition  Tor(H_{n-2}(M; Z), Z_2) = 0; with (C-L) it forces
//                  (C-Lambda) and couples Lambda = L mod 2.
struct ImmersionContext {
    int n = 2;
    int m = 2;
    Target target = Target::Euclidean;
    bool source_oriented = false;
    bool cond_lambda = false;
    bool cond_l = false;
    bool tor_condition = false;

    bool operator==(const ImmersionContext&) const = default;
};

inline void validate_context(const ImmersionContext& ctx) {
    if (ctx.n < 2 || ctx.m < 2)
        throw std::invalid_argument("ImmersionContext: n and m must be >= 2");
}

struct Z2 {
    int v = 0;  // 0 or 1

    constexpr Z2() = default;
    constexpr Z2(long long x) : v(static_cast<int>(((x % 2) + 2) % 2)) {}

    constexpr Z2 operator+(Z2 o) const { return Z2(v ^ o.v); }
    Z2& operator+=(Z2 o) {
        v ^= o.v;
        return *this;
    }
    bool operator==(const Z2&) const = default;
};

// J_r exists for 2 <= r <= m with m - r even, and only for odd n (the
// resolved r-fold locus has even dimension exactly then).
inline std::set<int> admissible_J_indices(const ImmersionContext& ctx) {
    validate_context(ctx);
    std::set<int> out;
    if (ctx.n % 2 == 1)
        for (int r = 2; r <= ctx.m; ++r)
            if ((ctx.m - r) % 2 == 0)
                out.insert(r);
    return out;
}

struct DefinednessSummary {
    std::set<int> j_indices;    // J_r exists for exactly these r
    bool j = false;             // J: component count of the deepest locus, n = 2 only
    bool lambda = false;        // Lambda: needs (C-Lambda) and a Euclidean target
    bool lambda_jumps = false;  // whether (m+1)-fold events move Lambda (m even)
    bool l = false;             // L: needs n even, oriented source, (C-L), Euclidean

    bool operator==(const DefinednessSummary&) const = default;
};

inline DefinednessSummary defined_invariants(const ImmersionContext& ctx) {
    validate_context(ctx);
    DefinednessSummary s;
    s.j_indices = admissible_J_indices(ctx);
    s.j = ctx.n == 2;
    s.lambda = ctx.cond_lambda && ctx.target == Target::Euclidean;
    s.lambda_jumps = ctx.m % 2 == 0;
    s.l = ctx.n % 2 == 0 && ctx.source_oriented && ctx.cond_l &&
          ctx.target == Target::Euclidean;
    return s;
}

// Current values of every invariant the context defines; absent optionals
// mean "not defined here", never "unknown".
struct InvariantState {
    std::map<int, long long> j_values;
    std::optional<long long> j_count;
    std::optional<Z2> lambda;
    std::optional<long long> l_value;

    bool operator==(const InvariantState&) const = default;
};

// The state of an embedding: every defined invariant is zero. Canonical
// base point for normalizing the calculus.
inline InvariantState zero_state(const ImmersionContext& ctx) {
    const auto def = defined_invariants(ctx);
    InvariantState s;
    for (int r : def.j_indices)
        s.j_values[r] = 0;
    if (def.j)
        s.j_count = 0;
    if (def.lambda)
        s.lambda = Z2(0);
    if (def.l)
        s.l_value = 0;
    return s;
}

inline void validate_state(const ImmersionContext& ctx, const InvariantState& state) {
    const auto def = defined_invariants(ctx);
    bool keys_match = state.j_values.size() == def.j_indices.size() &&
                      std::all_of(state.j_values.begin(), state.j_values.end(),
                                  [&](const auto& kv) { return def.j_indices.count(kv.first) > 0; });
    if (!keys_match)
        throw std::invalid_argument("InvariantState: J indices do not match the admissible set");
    if (state.j_count.has_value() != def.j)
        throw std::invalid_argument("InvariantState: J must be present iff n = 2");
    if (state.lambda.has_value() != def.lambda)
        throw std::invalid_argument("InvariantState: Lambda presence does not match the context");
    if (state.l_value.has_value() != def.l)
        throw std::invalid_argument("InvariantState: L presence does not match the context");
    if (state.lambda && state.l_value && ctx.tor_condition &&
        *state.lambda != Z2(*state.l_value))
        throw std::invalid_argument("InvariantState: Lambda != L mod 2 under the Tor condition");
}

// One transversal crossing of the codimension-1 discriminant.
struct StrataEvent {
    enum class Kind { SelfTangency, MultiplePoint };

    Kind kind = Kind::MultiplePoint;
    int depth = 0;  // tangency depth k, 2 <= k <= m; unused for MultiplePoint
    int sign = 1;   // +1 or -1: which side of the stratum is crossed to

    static StrataEvent self_tangency(int depth, int sign) {
        if (depth < 2)
            throw std::invalid_argument("StrataEvent: self-tangency depth must be >= 2");
        check_sign(sign);
        return {Kind::SelfTangency, depth, sign};
    }
    static StrataEvent multiple_point(int sign) {
        check_sign(sign);
        return {Kind::MultiplePoint, 0, sign};
    }
    StrataEvent inverse() const { return {kind, depth, -sign}; }

    bool operator==(const StrataEvent&) const = default;

  private:
    static void check_sign(int sign) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("StrataEvent: sign must be +1 or -1");
    }
};

inline InvariantState apply_event(const ImmersionContext& ctx, const InvariantState& state,
                                  const StrataEvent& event) {
    validate_state(ctx, state);
    if (event.sign != 1 && event.sign != -1)
        throw std::invalid_argument("StrataEvent: sign must be +1 or -1");
    InvariantState next = state;
    if (event.kind == StrataEvent::Kind::SelfTangency) {
        if (event.depth < 2 || event.depth > ctx.m)
            throw std::invalid_argument("StrataEvent: self-tangency depth outside [2, m]");
        // Tangencies at depth k only touch J_k (and J when the deepest,
        // 1-dimensional locus is the one modified). A depth with no defined
        // invariant is a legitimate no-op: the stratum exists either way.
        if (auto it = next.j_values.find(event.depth); it != next.j_values.end())
            it->second += 2LL * event.sign;
        if (ctx.n == 2 && event.depth == ctx.m && next.j_count)
            *next.j_count += event.sign;
    } else {
        if (next.l_value)
            *next.l_value += static_cast<long long>(event.sign) * (ctx.m + 1);
        // m+1 crossings change sign at once, so Lambda in Z_2 moves only
        // when m+1 is odd.
        if (next.lambda && ctx.m % 2 == 0)
            *next.lambda += Z2(1);
    }
    return next;
}

class EventError : public std::invalid_argument {
  public:
    EventError(std::size_t index, const std::string& what)
        : std::invalid_argument("event " + std::to_string(index) + ": " + what),
          index_(index) {}
    std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

// Fold apply_event over a script. trace[0] is the initial state and
// trace[i+1] the state after events[i]; errors carry the event index.
inline std::vector<InvariantState> run_script(const ImmersionContext& ctx,
                                              const InvariantState& state0,
                                              const std::vector<StrataEvent>& events) {
    std::vector<InvariantState> trace;
    trace.reserve(events.size() + 1);
    trace.push_back(state0);
    for (std::size_t i = 0; i < events.size(); ++i) {
        try {
            trace.push_back(apply_event(ctx, trace.back(), events[i]));
        } catch (const EventError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw EventError(i, e.what());
        }
    }
    return trace;
}

// Connected sum of two immersions with the same dimensions and Euclidean
// targets. Condition flags combine by logical AND, and every invariant
// defined for the sum is the sum of the operands' values; an invariant
// defined for only one operand is not defined for the sum.
inline std::pair<ImmersionContext, InvariantState> connected_sum(
    const ImmersionContext& ctx_a, const InvariantState& state_a,
    const ImmersionContext& ctx_b, const InvariantState& state_b) {
    validate_state(ctx_a, state_a);
    validate_state(ctx_b, state_b);
    if (ctx_a.n != ctx_b.n || ctx_a.m != ctx_b.m)
        throw std::invalid_argument("connected_sum: dimension mismatch");
    if (ctx_a.target != Target::Euclidean || ctx_b.target != Target::Euclidean)
        throw std::invalid_argument("connected_sum: both targets must be Euclidean");

    ImmersionContext ctx;
    ctx.n = ctx_a.n;
    ctx.m = ctx_a.m;
    ctx.target = Target::Euclidean;
    ctx.source_oriented = ctx_a.source_oriented && ctx_b.source_oriented;
    ctx.cond_lambda = ctx_a.cond_lambda && ctx_b.cond_lambda;
    ctx.cond_l = ctx_a.cond_l && ctx_b.cond_l;
    ctx.tor_condition = ctx_a.tor_condition && ctx_b.tor_condition;

    const auto def = defined_invariants(ctx);
    InvariantState s;
    for (int r : def.j_indices)
        s.j_values[r] = state_a.j_values.at(r) + state_b.j_values.at(r);
    if (def.j)
        s.j_count = *state_a.j_count + *state_b.j_count;
    if (def.lambda)
        s.lambda = *state_a.lambda + *state_b.lambda;
    if (def.l)
        s.l_value = *state_a.l_value + *state_b.l_value;
    return {ctx, s};
}

// Precomposing with an orientation-reversing diffeomorphism of the source:
// L picks up (-1)^(m+1); J_r, J and Lambda are orientation blind.
inline InvariantState reverse_source_orientation(const ImmersionContext& ctx,
                                                 const InvariantState& state) {
    validate_state(ctx, state);
    if (!ctx.source_oriented)
        throw std::invalid_argument("reverse_source_orientation: source is not oriented");
    InvariantState next = state;
    if (next.l_value && ctx.m % 2 == 0)
        *next.l_value = -*next.l_value;
    return next;
}

// Postcomposing with a hyperplane reflection of the Euclidean target:
// L picks up (-1)^m; everything else is unchanged.
inline InvariantState reflect_target(const ImmersionContext& ctx,
                                     const InvariantState& state) {
    validate_state(ctx, state);
    if (ctx.target != Target::Euclidean)
        throw std::invalid_argument("reflect_target: target must be Euclidean");
    InvariantState next = state;
    if (next.l_value && ctx.m % 2 == 1)
        *next.l_value = -*next.l_value;
    return next;
}

// The regular homotopy residues: l in Z_{m+1}, lambda in Z_2 (m odd only),
// j_r in Z_2. These never move under any event.
struct ResidueReport {
    long long modulus = 0;  // m + 1, the modulus of l
    std::optional<long long> l_residue;
    std::optional<Z2> lambda_residue;
    std::map<int, Z2> j_residues;

    bool operator==(const ResidueReport&) const = default;
};

inline ResidueReport residues(const ImmersionContext& ctx, const InvariantState& state) {
    validate_state(ctx, state);
    ResidueReport rep;
    rep.modulus = ctx.m + 1;
    if (state.l_value)
        rep.l_residue = ((*state.l_value % rep.modulus) + rep.modulus) % rep.modulus;
    if (state.lambda && ctx.m % 2 == 1)
        rep.lambda_residue = *state.lambda;
    for (const auto& [r, v] : state.j_values)
        rep.j_residues[r] = Z2(v);
    return rep;
}

// A closed generic loop never changes the state to first order; use this to
// check the commuting-crossings and cusp patterns around the codimension-2
// strata.
inline bool loop_check(const ImmersionContext& ctx, const InvariantState& state0,
                       const std::vector<StrataEvent>& loop) {
    return run_script(ctx, state0, loop).back() == state0;
}

}  // namespace genimm::calculus
