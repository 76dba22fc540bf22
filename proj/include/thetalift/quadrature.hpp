#pragma once

// Small quadrature kit: Gauss-Legendre panels and double-exponential rules.
// Integrands may return double or std::complex<double>.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace thetalift::quad {

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    double l1 = 0.0;
    int levels = 0;
};

namespace detail {

template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int k = 1; k <= N; ++k) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
                }
                dp = N * (z * p0 - p1) / (z * z - 1.0);
                double dz = p0 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }
};

inline const GaussLegendre<20>& gl20() {
    static const GaussLegendre<20> rule;
    return rule;
}
inline const GaussLegendre<10>& gl10() {
    static const GaussLegendre<10> rule;
    return rule;
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }

}  // namespace detail

/// 20-point Gauss-Legendre on [a, b]; error is |G20 - G10|.
template <class F>
auto gauss_panel(F&& f, double a, double b) {
    using T = decltype(f(a));
    const auto& hi = detail::gl20();
    const auto& lo = detail::gl10();
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    T s20{}, s10{};
    double l1 = 0.0;
    for (int i = 0; i < 20; ++i) {
        T v = f(mid + half * hi.x[i]);
        s20 += hi.w[i] * v;
        l1 += hi.w[i] * detail::magnitude(v);
    }
    for (int i = 0; i < 10; ++i) s10 += lo.w[i] * f(mid + half * lo.x[i]);
    Result<T> out;
    out.value = half * s20;
    out.error = std::abs(half) * detail::magnitude(s20 - s10);
    out.l1 = std::abs(half) * l1;
    return out;
}

/// Tanh-sinh rule on [a, b]. The integrand is called as f(x, da, db) where
/// da = x - a and db = b - x are computed without cancellation, so endpoint
/// singularities can be resolved. Halves the step until successive levels
/// agree to rel_tol relative to the L1 norm.
template <class F>
auto tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-13, int max_level = 9) {
    using T = decltype(f(a, 0.0, 0.0));
    constexpr double half_pi = std::numbers::pi / 2;
    const double len = b - a;
    const double t_max = 3.2;

    auto sample = [&](double t, T& acc, double& l1) {
        double s = half_pi * std::sinh(t);
        double ch = std::cosh(s);
        double w = half_pi * std::cosh(t) / (ch * ch);
        // 1 +- tanh(s) written as 2 / (1 + e^{-+2s}) keeps the node near an
        // endpoint exact.
        double da = len / (1.0 + std::exp(-2.0 * s));
        double db = len / (1.0 + std::exp(2.0 * s));
        if (da <= 0.0 || db <= 0.0) return;
        double x = (s < 0) ? a + da : b - db;
        T v = f(x, da, db);
        acc += (0.5 * len * w) * v;
        l1 += std::abs(0.5 * len * w) * detail::magnitude(v);
    };

    Result<T> out;
    double h = 1.0;
    T sum{};
    double l1 = 0.0;
    sample(0.0, sum, l1);
    for (double t = h; t <= t_max; t += h) {
        sample(t, sum, l1);
        sample(-t, sum, l1);
    }
    T prev = sum * h;
    out.value = prev;
    out.l1 = l1 * h;
    out.error = detail::magnitude(prev);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= t_max; t += 2 * h) {
            sample(t, sum, l1);
            sample(-t, sum, l1);
        }
        T cur = sum * h;
        out.error = detail::magnitude(cur - prev);
        out.value = cur;
        out.l1 = l1 * h;
        out.levels = level;
        if (level >= 3 && out.error <= rel_tol * out.l1) break;
        prev = cur;
    }
    return out;
}

/// Sinh-sinh rule on the whole real line for rapidly decaying integrands.
template <class F>
auto sinh_sinh(F&& f, double rel_tol = 1e-13, int max_level = 9) {
    using T = decltype(f(0.0));
    constexpr double half_pi = std::numbers::pi / 2;
    const double t_max = 4.5;

    auto sample = [&](double t, T& acc, double& l1) {
        double s = half_pi * std::sinh(t);
        double x = std::sinh(s);
        double w = half_pi * std::cosh(t) * std::cosh(s);
        if (!std::isfinite(x) || !std::isfinite(w)) return;
        T v = f(x);
        if (detail::magnitude(v) == 0.0) return;
        acc += w * v;
        l1 += w * detail::magnitude(v);
    };

    Result<T> out;
    double h = 0.5;
    T sum{};
    double l1 = 0.0;
    sample(0.0, sum, l1);
    for (double t = h; t <= t_max; t += h) {
        sample(t, sum, l1);
        sample(-t, sum, l1);
    }
    T prev = sum * h;
    out.value = prev;
    out.l1 = l1 * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= t_max; t += 2 * h) {
            sample(t, sum, l1);
            sample(-t, sum, l1);
        }
        T cur = sum * h;
        out.error = detail::magnitude(cur - prev);
        out.value = cur;
        out.l1 = l1 * h;
        out.levels = level;
        if (level >= 3 && out.error <= rel_tol * out.l1) break;
        prev = cur;
    }
    return out;
}

}  // namespace thetalift::quad
