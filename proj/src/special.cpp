#include "thetalift/special.hpp"

#include <cmath>
#include <numbers>

#include "thetalift/arith.hpp"
#include "thetalift/error.hpp"

namespace thetalift::special {

double zeta(double s) {
    if (!(s > 1.0)) throw DomainError("zeta: needs s > 1");
    const int n = 12;
    double sum = 0.0;
    for (int k = n - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double N = n;
    sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
    // Correction terms B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}.
    double rising = s;  // s (s+1) ... (s+2j-2)
    double fact = 2.0;  // (2j)!
    double npow = std::pow(N, -s - 1.0);
    for (int j = 1; j <= 12; ++j) {
        double term = arith::bernoulli(2 * j) / fact * rising * npow;
        sum += term;
        if (std::abs(term) < 1e-18 * sum) break;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2.0 * j + 1) * (2.0 * j + 2);
        npow /= N * N;
    }
    return sum;
}

std::complex<double> lgamma(std::complex<double> z) {
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
            throw DomainError("lgamma: pole at nonpositive integer");
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return std::log(pi) - std::log(std::sin(pi * z)) - lgamma(1.0 - z);
    }
    std::complex<double> shift = 0.0;
    while (std::abs(z) < 15.0 || z.real() < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_{2k} / (2k(2k-1) z^{2k-1})
    std::complex<double> series = 0.0;
    std::complex<double> zinv = 1.0 / z, zpow = zinv, z2 = zinv * zinv;
    for (int k = 1; k <= 10; ++k) {
        series += arith::bernoulli(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * zpow;
        zpow *= z2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series - shift;
}

std::complex<double> beta(std::complex<double> v, std::complex<double> w) {
    return std::exp(lgamma(v) + lgamma(w) - lgamma(v + w));
}

}  // namespace thetalift::special
