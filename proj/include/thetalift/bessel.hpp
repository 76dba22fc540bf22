#pragma once

#include <complex>
#include <string_view>

namespace thetalift::bessel {

/// Scaled K-Bessel value e^{pi r/2} K_{ir}(y) = mantissa * exp(log_scale).
///
/// The scale is the size of the integrand at the saddle of the integration
/// path, so |mantissa| is O(1) (it is at most O(r^{-1/4}) once y > r) and
/// log_scale <= 0. `underflow` is set when the product is not representable.
struct KValue {
    double mantissa = 0.0;
    double log_scale = 0.0;
    double error_estimate = 0.0;  ///< absolute, in units of exp(log_scale)
    double l1_norm = 0.0;         ///< integral of |integrand|, same units
    bool underflow = false;

    double value() const;
};

struct QuadratureOptions {
    double rel_tol = 1e-13;
    /// Error estimates above max_rel_error * l1_norm raise ConvergenceError.
    double max_rel_error = 1e-8;
};

/// e^{pi r/2} K_{ir}(y) for r >= 0, y > 0, with exponent split off.
///
/// Integrates K_{ir}(y) = 1/2 int exp(-y cosh t + i r t) dt over a deformed
/// contour t = u + i beta(u): the horizontal line Im t = pi/2 while
/// y sinh(u) < r u, and the curve sin(beta) = r u / (y sinh u) beyond it,
/// on which the phase is stationary. For y >= r the flat piece is empty and
/// the curve passes through the saddle at i asin(r/y).
KValue k_scaled_log(double r, double y, const QuadratureOptions& opts = {});

/// e^{pi r/2} K_{ir}(y); 0 when the value underflows.
double k_scaled(double r, double y);

/// Upper bound for |e^{pi r/2} K_{ir}(x)| valid for x > r, as a logarithm.
///
/// Shifting the real-axis integral to Im t = asin(r/x) gives
/// |k| <= exp(r acos(r/x)) K_0(sqrt(x^2 - r^2)).
double log_k_majorant(double r, double x);

enum class Regime { Oscillatory, Transition, DecayNear, DecayFar };

std::string_view to_string(Regime regime);

/// Regime of (r, y); the transition strip is |y - r| <= width * r^{1/3}.
Regime classify(double r, double y, double width = 1.0);

/// Implied constants of the four regime bounds.
///
/// Defaults were calibrated on r in {50, 100, 200}, y log-uniform on [1, 4r]
/// (1000 points per r) by taking twice the largest observed ratio
/// k_scaled / shape (tools/calibrate.cpp). c4 and c6 are below the exact decay rates
/// min f(rho)/(rho-1)^{3/2} = 0.685 and min f(rho)/rho = 0.342 where
/// f(rho) = sqrt(rho^2-1) + asin(1/rho) - pi/2.
struct EnvelopeConstants {
    double c1 = 5.01;
    double c2 = 4.29;
    double c3 = 1.4;
    double c4 = 0.6;
    double c5 = 0.00313;
    double c6 = 0.3;
    double transition_width = 1.0;
};

/// Regime-appropriate upper envelope for |k_scaled(r, y)|.
double envelope(double r, double y, const EnvelopeConstants& c = {});

/// Complex Airy function Ai(z).
///
/// Maclaurin series (in extended precision) for |z| <= 6, the asymptotic
/// expansion for larger |z| with |arg z| <= 2pi/3, and the connection
/// formula Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z) otherwise.
std::complex<double> airy_ai(std::complex<double> z);

struct AiryApprox {
    double value = 0.0;           ///< Re of pi (2/y)^{1/3} Ai(xi e^{-2 pi i/3})
    double imag_residual = 0.0;   ///< Im part of the same expression
    std::complex<double> xi;
};

/// Transition-zone approximation pi (2/y)^{1/3} Ai(xi e^{-2pi i/3}),
/// xi = i (y - r) (-i y / 2)^{-1/3}. Throws DomainError outside
/// |y - r| <= width * r^{1/3}.
AiryApprox airy_transition(double r, double y, double width = 1.0);

}  // namespace thetalift::bessel
