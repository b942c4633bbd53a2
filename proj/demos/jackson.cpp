// Verifies the Jackson sl2 deformation order by order and prints the
// twist coefficients on e next to the series expansion of (2+t)/(2(1+t)).

#include "homdef/homdef.hpp"

#include <iostream>

int main() {
    using namespace homdef;
    const int N = 8;

    DeformationSeries d = catalog::jackson_sl2(N);
    VerifyReport rep = verify(d);
    for (const auto& r : rep.orders)
        std::cout << r.str() << "\n";

    TruncSeries numer = TruncSeries::constant(Rational(2), N) + TruncSeries::variable(N);
    TruncSeries denom = TruncSeries::constant(Rational(2), N) +
                        Rational(2) * TruncSeries::variable(N);
    TruncSeries closed_form = numer * denom.inverse();
    std::cout << "alpha_t(e) coefficient series: " << closed_form.str() << "\n";
    for (int k = 0; k <= N; ++k)
        std::cout << "  alpha_" << k << "(e) = " << d.twists[static_cast<std::size_t>(k)].entry(0, 0).str()
                  << " (series coefficient " << closed_form.coeff(k).str() << ")\n";
    return rep.pass ? 0 : 1;
}
