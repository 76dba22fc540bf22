#pragma once

#include <complex>

#include "thetalift/maass.hpp"

namespace thetalift::petersson {

/// log |Gamma(N/4 + i r/2)|^2 from the finite product
/// (pi r/2)/sinh(pi r/2) * prod_{k=1}^{N/4-1} (k^2 + (r/2)^2).
double log_abs_gamma_sq_product(int N, double r);
/// The same quantity from the complex log Gamma function.
double log_abs_gamma_sq_complex(int N, double r);

/// Archimedean factor 2^{1-N/2} pi^2 |Gamma(N/4 + i r/2)|^2 / Gamma(N/4 + 1/2)^2.
double arch_factor(int N, double r);
double log_arch_factor(int N, double r);

/// The factor before simplification, written with s0 = (N-1)/2:
/// pi Gamma(v) Gamma(w) / Gamma(s0 + 1/2) * Gamma(1/2) Gamma(s0/2 + 1/4) / Gamma(s0/2 + 3/4),
/// v, w = s0/2 + 1/4 +- i r/2. Computed with complex log Gamma.
double arch_factor_unsimplified(int N, double r);

/// Both integrals of the archimedean computation evaluated by quadrature:
/// 2 pi * int_0^inf a^{s0-1/2+ir} / (1+a^2)^{s0+1/2} da * int_R (1+x^2)^{-s0/2-3/4} dx.
std::complex<double> arch_factor_quadrature(int N, double r);

struct BetaOracleReport {
    std::complex<double> closed_form;  ///< Gamma(v) Gamma(w) / Gamma(v+w)
    std::complex<double> half_line;    ///< int_0^inf u^{v-1} (1+u)^{-v-w} du
    std::complex<double> trigonometric;  ///< 2 int_0^{pi/2} sin^{2v-1} cos^{2w-1}
    double discrepancy = 0.0;          ///< max relative deviation from closed_form
};

/// Numerically integrates both Beta representations; needs Re v, Re w > 0.
BetaOracleReport beta_oracle(std::complex<double> v, std::complex<double> w);

struct AdjointL {
    double value = 0.0;          ///< truncated Euler product over p <= P
    double log_tail_bound = 0.0; ///< bound on |log L - log L_P|
    double truncation_error = 0.0;  ///< value * expm1(log_tail_bound)
    long long primes_used = 0;
    long long P = 0;
};

/// Local adjoint factor 1 / ((1 - (mu^2 - 2) X + X^2)(1 - X)), X = p^{-s}.
double adjoint_local_factor(double mu, double p, double s);

/// prod_{p <= P} of the local factor, with tail bound
/// 3 P^{2theta-s+1} / ((s-1-2theta)(1-P^{2theta-s})).
AdjointL adjoint_L(const MaassForm& f, double s, long long P);

struct NormFactorization {
    int N = 0;
    Rational s0;
    double arch_factor = 0.0;
    double log_arch_factor = 0.0;
    double arch_factor_dual = 0.0;  ///< arch factor via complex log Gamma
    AdjointL adjoint;
    double zeta_half = 0.0;  ///< zeta(N/2 + 1)
    double zeta_N = 0.0;     ///< zeta(N)
    double ratio = 0.0;      ///< ||F_f||^2 / ||f||^2
    double log_ratio = 0.0;
    double ratio_dual = 0.0;  ///< ratio with arch_factor_dual
    double ratio_relative_error = 0.0;  ///< from the Euler tail bound
};

/// Assembles ||F_f||^2 / ||f||^2 = L(N/2, Ad) / (zeta(N/2+1) zeta(N)) * arch_factor.
NormFactorization norm_ratio(const MaassForm& f, int N, long long P);

}  // namespace thetalift::petersson
