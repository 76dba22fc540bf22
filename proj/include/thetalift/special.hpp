#pragma once

#include <complex>

namespace thetalift::special {

/// Riemann zeta for real s > 1 (Euler-Maclaurin summation).
double zeta(double s);

/// Principal-branch log Gamma for complex z off the nonpositive integers.
/// Stirling series after shifting Re z above 15, reflection for Re z < 1/2.
std::complex<double> lgamma(std::complex<double> z);

/// Beta function B(v, w) = Gamma(v) Gamma(w) / Gamma(v + w).
std::complex<double> beta(std::complex<double> v, std::complex<double> w);

}  // namespace thetalift::special
