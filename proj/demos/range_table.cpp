// Prints the codimension-two range data for small j straight from the
// library. The CLI produces the same table via `genimm table`.

#include "genimm/divisibility.hpp"

#include <iostream>

int main() {
    using namespace genimm::numthy;
    for (int j = 1; j <= 30; ++j) {
        const long long q = 2LL * j + 1;
        const BigInt muj = mu(j);
        const LRangeReport range = l_range(2 * j);
        std::cout << "j = " << j << ": 2j+1 = " << q << " = "
                  << factorize(BigInt(static_cast<long>(q))).str() << ", mu = " << muj.get_str()
                  << " = " << factorize(muj).str() << ", divisor = " << range.divisor
                  << (range.exact ? " (range settled)" : "") << "\n";
    }
    return 0;
}
