// bessel.hpp — Integer-order Bessel functions of the first kind.

#pragma once

namespace chrw {

// J_n(x) for n >= 0. Absolute error below 1e-12 for |x| <= 50, n <= 30.
// Throws std::domain_error on non-finite x and std::invalid_argument on n < 0.
double bessel_j(int n, double x);

// J_n(x) for any integer n, via J_{-n}(x) = (-1)^n J_n(x).
double bessel_j_signed(int n, double x);

}  // namespace chrw
