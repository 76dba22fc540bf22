#include "thetalift/petersson.hpp"

#include <cmath>
#include <numbers>

#include "thetalift/arith.hpp"
#include "thetalift/quadrature.hpp"
#include "thetalift/special.hpp"

namespace thetalift::petersson {

namespace {

constexpr double kPi = std::numbers::pi;

void check_rank(int N) {
    if (N <= 0 || N % 8 != 0) throw DomainError("rank N must be a positive multiple of 8, got " + std::to_string(N));
}

// log(x / sinh x) for x >= 0 without overflow.
double log_x_over_sinh(double x) {
    if (x < 1e-8) return -x * x / 6.0;
    if (x > 20.0) return std::log(2.0 * x) - x - std::log1p(-std::exp(-2.0 * x));
    return std::log(x / std::sinh(x));
}

}  // namespace

double log_abs_gamma_sq_product(int N, double r) {
    check_rank(N);
    double a = std::abs(r) / 2.0;
    double out = log_x_over_sinh(kPi * a);
    for (int k = 1; k <= N / 4 - 1; ++k) out += std::log(k * static_cast<double>(k) + a * a);
    return out;
}

double log_abs_gamma_sq_complex(int N, double r) {
    check_rank(N);
    return 2.0 * special::lgamma({N / 4.0, r / 2.0}).real();
}

double log_arch_factor(int N, double r) {
    check_rank(N);
    return (1.0 - N / 2.0) * std::numbers::ln2 + 2.0 * std::log(kPi) + log_abs_gamma_sq_product(N, r) -
           2.0 * std::lgamma(N / 4.0 + 0.5);
}

double arch_factor(int N, double r) { return std::exp(log_arch_factor(N, r)); }

double arch_factor_unsimplified(int N, double r) {
    check_rank(N);
    const double s0 = (N - 1) / 2.0;
    std::complex<double> v{s0 / 2.0 + 0.25, r / 2.0}, w{s0 / 2.0 + 0.25, -r / 2.0};
    std::complex<double> lg = special::lgamma(v) + special::lgamma(w) - special::lgamma(s0 + 0.5) +
                              special::lgamma(0.5) + special::lgamma(s0 / 2.0 + 0.25) -
                              special::lgamma(s0 / 2.0 + 0.75);
    return kPi * std::exp(lg.real());
}

std::complex<double> arch_factor_quadrature(int N, double r) {
    check_rank(N);
    const double s0 = (N - 1) / 2.0;
    // a = e^t: int a^{s0-1/2+ir} (1+a^2)^{-s0-1/2} da = int e^{(s0+1/2+ir) t} (1+e^{2t})^{-s0-1/2} dt.
    auto a_integrand = [&](double t) {
        double log_mag = (s0 + 0.5) * t - (s0 + 0.5) * (t > 0 ? 2.0 * t + std::log1p(std::exp(-2.0 * t))
                                                                : std::log1p(std::exp(2.0 * t)));
        return std::polar(std::exp(log_mag), r * t);
    };
    auto a_part = quad::sinh_sinh(a_integrand, 1e-14, 12);
    // x = sinh t: int (1+x^2)^{-s0/2-3/4} dx = int cosh(t)^{-s0-1/2} dt.
    auto x_integrand = [&](double t) { return std::exp(-(s0 + 0.5) * std::log(std::cosh(t))); };
    auto x_part = quad::sinh_sinh(x_integrand, 1e-14, 12);
    return 2.0 * kPi * a_part.value * x_part.value;
}

BetaOracleReport beta_oracle(std::complex<double> v, std::complex<double> w) {
    if (!(v.real() > 0.0) || !(w.real() > 0.0)) throw DomainError("beta_oracle: needs Re v > 0 and Re w > 0");
    BetaOracleReport rep;
    rep.closed_form = special::beta(v, w);
    // u = e^t on the half line.
    auto half_line = [&](double t) {
        std::complex<double> log_one_plus = t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
        return std::exp(v * t - (v + w) * log_one_plus);
    };
    rep.half_line = quad::sinh_sinh(half_line, 1e-14, 12).value;
    // 2 int sin^{2v-1} cos^{2w-1}; near the endpoints sin and cos are taken from the
    // exact distances da, db to keep the singular powers accurate.
    auto trig = [&](double, double da, double db) {
        double s = std::sin(da), c = std::sin(db);
        return std::exp((2.0 * v - 1.0) * std::log(s) + (2.0 * w - 1.0) * std::log(c));
    };
    rep.trigonometric = 2.0 * quad::tanh_sinh(trig, 0.0, kPi / 2.0, 1e-14, 12).value;
    double scale = std::abs(rep.closed_form);
    rep.discrepancy = std::max(std::abs(rep.half_line - rep.closed_form), std::abs(rep.trigonometric - rep.closed_form)) / scale;
    return rep;
}

double adjoint_local_factor(double mu, double p, double s) {
    double X = std::pow(p, -s);
    return 1.0 / ((1.0 - (mu * mu - 2.0) * X + X * X) * (1.0 - X));
}

AdjointL adjoint_L(const MaassForm& f, double s, long long P) {
    const double theta = to_double(f.theta());
    if (!(s > 1.0 + 2.0 * theta)) throw DomainError("adjoint_L: s must exceed 1 + 2 theta for absolute convergence");
    if (P < 2) throw DomainError("adjoint_L: P must be >= 2");
    AdjointL out;
    out.P = P;
    double log_value = 0.0;
    for (long long p : arith::primes_up_to(P)) {
        log_value += std::log(adjoint_local_factor(f.prime_eigenvalue(p), static_cast<double>(p), s));
        ++out.primes_used;
    }
    out.value = std::exp(log_value);
    const double e = 2.0 * theta - s;  // negative
    const double Pd = static_cast<double>(P);
    out.log_tail_bound = 3.0 * std::pow(Pd, e + 1.0) / ((s - 1.0 - 2.0 * theta) * (1.0 - std::pow(Pd, e)));
    out.truncation_error = out.value * std::expm1(out.log_tail_bound);
    return out;
}

NormFactorization norm_ratio(const MaassForm& f, int N, long long P) {
    check_rank(N);
    NormFactorization nf;
    nf.N = N;
    nf.s0 = Rational(N - 1, 2);
    nf.log_arch_factor = log_arch_factor(N, f.r());
    nf.arch_factor = std::exp(nf.log_arch_factor);
    nf.arch_factor_dual = std::exp((1.0 - N / 2.0) * std::numbers::ln2 + 2.0 * std::log(kPi) +
                                   log_abs_gamma_sq_complex(N, f.r()) - 2.0 * std::lgamma(N / 4.0 + 0.5));
    nf.adjoint = adjoint_L(f, N / 2.0, P);
    nf.zeta_half = special::zeta(N / 2.0 + 1.0);
    nf.zeta_N = special::zeta(static_cast<double>(N));
    double factor = nf.adjoint.value / (nf.zeta_half * nf.zeta_N);
    nf.log_ratio = std::log(factor) + nf.log_arch_factor;
    nf.ratio = std::exp(nf.log_ratio);
    nf.ratio_dual = factor * nf.arch_factor_dual;
    nf.ratio_relative_error = std::expm1(nf.adjoint.log_tail_bound);
    return nf;
}

}  // namespace thetalift::petersson
