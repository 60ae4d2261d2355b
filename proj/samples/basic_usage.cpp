// Grid minimum, Bernstein approximation and a bound certificate for
// f = 2 x1^2 + x2^2 - 5 x1 x2.

#include <iostream>

#include "ptas/ptas.hpp"

int main() {
    using namespace ptas;
    auto f = parse_polynomial("2*x1^2 + x2^2 - 5*x1*x2", 2);

    auto grid = grid_minimize(f, 2);
    std::cout << "f_Delta(2,2) = " << grid.value << " at " << grid.argmin.alpha << "/2\n";

    auto b = bernstein_quadratic(f, 2);
    std::cout << "B_2(f) = " << to_string(*b.reduced) << '\n';
    std::cout << "B_2(f)(3/8,5/8) = " << b.evaluate({Rational(3, 8), Rational(5, 8)}) << '\n';

    auto cert = bound_quadratic(f, 2, RangeInput::exact(Rational(-17, 32), 2));
    std::cout << "gap " << cert.gap << " <= bound " << cert.bound_value << ": "
              << (cert.satisfied ? "satisfied" : "violated") << '\n';

    auto approx = ptas_approximate(f, Rational(1, 4), RangeInput::from_coefficients(f));
    std::cout << "epsilon 1/4: r = " << approx.r << ", value " << approx.value << '\n';
}
