// Solves for every twist making the sl2 brackets a Hom-Lie algebra and
// prints the kernel basis with the family relations.

#include "homdef/homdef.hpp"

#include <iostream>

int main() {
    using namespace homdef;
    catalog::TwistSolveResult r = catalog::solve_sl2_twists();
    std::cout << "solution space dimension: " << r.dimension << "\n";
    for (std::size_t i = 0; i < r.basis.size(); ++i)
        std::cout << "basis[" << i << "] = " << r.basis[i].str() << "\n";
    std::cout << "relations:";
    for (const auto& rel : r.relations)
        std::cout << " " << rel;
    std::cout << "\n";
    return r.dimension == 6 ? 0 : 1;
}
