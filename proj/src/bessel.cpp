#include "thetalift/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "thetalift/error.hpp"
#include "thetalift/quadrature.hpp"

namespace thetalift::bessel {

namespace {

constexpr double kPi = std::numbers::pi;
// Integrand magnitudes below e^{-46} relative to the saddle are dropped.
constexpr double kCutoffExponent = -46.0;

double u_over_sinh(double u) {
    if (std::abs(u) < 1e-8) return 1.0;
    return u / std::sinh(u);
}

double log_sinh_over_u(double u) {
    if (u < 1e-4) return u * u / 6.0;
    if (u > 20.0) return u - std::numbers::ln2 - std::log(u) + std::log1p(-std::exp(-2.0 * u));
    return std::log(std::sinh(u) / u);
}

// Solves sinh(u)/u = ratio for ratio > 1.
double flat_endpoint(double ratio) {
    const double target = std::log(ratio);
    double lo = 0.0, hi = 1.0;
    while (log_sinh_over_u(hi) < target) hi *= 2.0;
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double f = log_sinh_over_u(u) - target;
        if (f > 0) hi = u; else lo = u;
        double deriv = (u < 1e-4) ? u / 3.0 : 1.0 / std::tanh(u) - 1.0 / u;
        double next = u - f / deriv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - u) <= 1e-15 * std::max(1.0, u)) { u = next; break; }
        u = next;
    }
    return u;
}

}  // namespace

double KValue::value() const {
    if (underflow) return 0.0;
    return mantissa * std::exp(log_scale);
}

KValue k_scaled_log(double r, double y, const QuadratureOptions& opts) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("k_scaled: y must be positive, got " + std::to_string(y));
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("k_scaled: r must be nonnegative, got " + std::to_string(r));

    const double ratio = r / y;
    double u1 = 0.0;
    double scale = 0.0;
    if (ratio < 1.0) {
        // Saddle at i asin(r/y); Re of the exponent there, shifted by pi r/2.
        scale = -std::sqrt((y - r) * (y + r)) + r * std::acos(ratio);
    } else if (ratio > 1.0) {
        u1 = flat_endpoint(ratio);
    }

    // Exponent along the curved piece, relative to `scale`.
    auto exponent = [&](double u) {
        double g = std::min(1.0, ratio * u_over_sinh(u));
        double cos_beta = std::sqrt((1.0 - g) * (1.0 + g));
        return -y * std::cosh(u) * cos_beta + r * std::acos(g) - scale;
    };

    KValue out;
    out.log_scale = scale;

    // Flat piece: Im t = pi/2, integrand cos(r u - y sinh u).
    if (u1 > 0.0) {
        auto phase_speed = [&](double u) { return std::abs(r - y * std::cosh(u)); };
        auto integrand = [&](double u) { return std::cos(r * u - y * std::sinh(u)); };
        double a = 0.0;
        while (a < u1) {
            double h = std::min(0.5, u1 - a);
            for (int it = 0; it < 3; ++it) {
                double speed = std::max({phase_speed(a), phase_speed(a + h), 1.0});
                h = std::min(h, kPi / speed);
            }
            auto panel = quad::gauss_panel(integrand, a, a + h);
            out.mantissa += panel.value;
            out.error_estimate += panel.error;
            out.l1_norm += panel.l1;
            a += h;
        }
    }

    // Curved piece from u1 to where the integrand drops below e^{-46}.
    double step = 0.125;
    while (exponent(u1 + step) > kCutoffExponent) step *= 2.0;
    double lo = 0.0, hi = step;
    for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (lo + hi);
        if (exponent(u1 + mid) > kCutoffExponent) lo = mid; else hi = mid;
    }
    const double upper = u1 + hi;
    auto curve = [&](double u, double, double) { return std::exp(exponent(u)); };
    auto part = quad::tanh_sinh(curve, u1, upper, opts.rel_tol);
    out.mantissa += part.value;
    out.error_estimate += part.error;
    out.l1_norm += part.l1;

    if (out.error_estimate > opts.max_rel_error * out.l1_norm) {
        throw ConvergenceError("k_scaled: quadrature did not converge at r=" + std::to_string(r) +
                                   ", y=" + std::to_string(y),
                               out.error_estimate / out.l1_norm);
    }
    double log_abs = out.log_scale + std::log(std::abs(out.mantissa));
    out.underflow = out.mantissa != 0.0 && log_abs < -745.0;
    return out;
}

double k_scaled(double r, double y) { return k_scaled_log(r, y).value(); }

double log_k_majorant(double r, double x) {
    if (!(x > r) || r < 0.0) throw DomainError("log_k_majorant: needs x > r >= 0");
    double z = std::sqrt((x - r) * (x + r));
    double log_k0 = (z < 600.0) ? std::log(std::cyl_bessel_k(0.0, z))
                                : 0.5 * std::log(kPi / (2.0 * z)) - z;
    return r * std::acos(r / x) + log_k0;
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Oscillatory: return "OSCILLATORY";
        case Regime::Transition: return "TRANSITION";
        case Regime::DecayNear: return "DECAY_NEAR";
        case Regime::DecayFar: return "DECAY_FAR";
    }
    return "UNKNOWN";
}

Regime classify(double r, double y, double width) {
    double strip = width * std::cbrt(r);
    if (std::abs(y - r) <= strip) return Regime::Transition;
    if (y < r) return Regime::Oscillatory;
    if (y >= 2.0 * r) return Regime::DecayFar;
    return Regime::DecayNear;
}

double envelope(double r, double y, const EnvelopeConstants& c) {
    if (!(r > 0.0) || !(y > 0.0)) throw DomainError("envelope: needs r > 0 and y > 0");
    switch (classify(r, y, c.transition_width)) {
        case Regime::Oscillatory:
            return c.c1 * std::pow(r, -0.25) * std::pow(r - y, -0.25);
        case Regime::Transition:
            return c.c2 * std::pow(r, -1.0 / 3.0);
        case Regime::DecayNear: {
            double d = y - r;
            return c.c3 * std::pow(r, -0.25) * std::pow(d, -0.25) *
                   std::exp(-c.c4 * std::pow(d, 1.5) / std::sqrt(r));
        }
        case Regime::DecayFar:
            return c.c5 * std::exp(-c.c6 * y);
    }
    return 0.0;
}

namespace {

using cld = std::complex<long double>;

constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAip0 = 0.258819403792806798405183560189203963L;  // -Ai'(0)

std::complex<double> airy_series(std::complex<double> zd) {
    cld z(zd.real(), zd.imag());
    cld z3 = z * z * z;
    cld f = 1.0L, g = z;
    cld tf = 1.0L, tg = z;
    for (int k = 0; k < 400; ++k) {
        long double a = 3.0L * k;
        tf *= z3 / ((a + 2.0L) * (a + 3.0L));
        tg *= z3 / ((a + 3.0L) * (a + 4.0L));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-22L * std::abs(f) && std::abs(tg) < 1e-22L * std::abs(g) + 1e-300L) break;
    }
    cld v = kAi0 * f - kAip0 * g;
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Valid for |arg z| <= 2pi/3 and |z| large.
std::complex<double> airy_asymptotic(std::complex<double> z) {
    std::complex<double> zeta = (2.0 / 3.0) * z * std::sqrt(z);
    std::complex<double> sum = 1.0, term = 1.0;
    double u = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 60; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        std::complex<double> next = term * (-1.0) / zeta;
        double mag = u * std::pow(std::abs(zeta), -k);
        if (mag > last) break;
        term = next;
        sum += u * term;
        last = mag;
        if (mag < 1e-17) break;
    }
    return std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(z, 0.25)) * sum;
}

}  // namespace

std::complex<double> airy_ai(std::complex<double> z) {
    if (std::abs(z) <= 6.0) return airy_series(z);
    if (std::abs(std::arg(z)) <= 2.0 * kPi / 3.0) return airy_asymptotic(z);
    const std::complex<double> w = std::polar(1.0, 2.0 * kPi / 3.0);
    return -w * airy_asymptotic(w * z) - w * w * airy_asymptotic(w * w * z);
}

AiryApprox airy_transition(double r, double y, double width) {
    if (!(r > 0.0) || !(y > 0.0)) throw DomainError("airy_transition: needs r > 0 and y > 0");
    if (std::abs(y - r) > width * std::cbrt(r) * (1.0 + 1e-12)) {
        throw DomainError("airy_transition: y = " + std::to_string(y) + " outside the transition strip of r = " +
                          std::to_string(r));
    }
    using namespace std::complex_literals;
    std::complex<double> xi = 1.0i * (y - r) * std::pow(-1.0i * (y / 2.0), -1.0 / 3.0);
    std::complex<double> arg = xi * std::polar(1.0, -2.0 * kPi / 3.0);
    std::complex<double> v = kPi * std::cbrt(2.0 / y) * airy_ai(arg);
    return {v.real(), v.imag(), xi};
}

}  // namespace thetalift::bessel
