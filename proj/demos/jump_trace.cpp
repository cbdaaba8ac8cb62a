// Walks a short path through the discriminant for immersions S^5 -> R^8
// (n = 3, m = 2) and for S^3 -> R^5 (n = 2, m = 2), printing how the
// invariants move at each crossing.

#include "genimm/calculus.hpp"

#include <iostream>

using namespace genimm::calculus;

static void print_state(const std::string& label, const InvariantState& s) {
    std::cout << label << ":";
    for (const auto& [r, v] : s.j_values)
        std::cout << " J_" << r << "=" << v;
    if (s.j_count)
        std::cout << " J=" << *s.j_count;
    if (s.lambda)
        std::cout << " Lambda=" << s.lambda->v;
    if (s.l_value)
        std::cout << " L=" << *s.l_value;
    std::cout << "\n";
}

int main() {
    // n odd: only J_2 lives here, jumping by 2 at depth-2 tangencies.
    ImmersionContext odd{.n = 3, .m = 2, .target = Target::GeneralManifold};
    InvariantState s = zero_state(odd);
    print_state("S^5 -> W^8 start", s);
    s = apply_event(odd, s, StrataEvent::self_tangency(2, +1));
    s = apply_event(odd, s, StrataEvent::self_tangency(2, +1));
    print_state("after two positive tangencies", s);

    // n = 2 with an oriented source: J and L, the latter jumping by m+1 = 3
    // at triple points.
    ImmersionContext even{.n = 2,
                          .m = 2,
                          .target = Target::Euclidean,
                          .source_oriented = true,
                          .cond_l = true};
    InvariantState t = zero_state(even);
    print_state("S^3 -> R^5 start", t);
    auto trace = run_script(even, t,
                            {StrataEvent::multiple_point(+1), StrataEvent::multiple_point(+1),
                             StrataEvent::self_tangency(2, -1)});
    print_state("after two triple points and a tangency", trace.back());
    const auto rep = residues(even, trace.back());
    std::cout << "residue l = " << *rep.l_residue << " (mod " << rep.modulus << ")\n";
    return 0;
}
