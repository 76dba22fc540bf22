#include "thetalift/lift.hpp"

#include <cmath>
#include <numbers>

#include "thetalift/arith.hpp"
#include "thetalift/special.hpp"

namespace thetalift::lift {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) comp += (sum - t) + v;
        else comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct ComplexSum {
    CompensatedSum re, im;
    void add(std::complex<double> v) {
        re.add(v.real());
        im.add(v.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

void check_rank(int N) {
    if (N <= 0 || N % 8 != 0) throw DomainError("rank N must be a positive multiple of 8, got " + std::to_string(N));
}

// -2k / B_k, the Eisenstein normalisation of the weight-k theta series.
double eisenstein_factor(int k) { return -2.0 * k / arith::bernoulli(k); }

// Majorant of the shell size r(m); exact Eisenstein value for N = 8, 16.
double shell_count_majorant(int N, long long m) {
    const int k = N / 2;
    double kappa = (N == 8 || N == 16) ? 1.0 : 2.0;
    return kappa * eisenstein_factor(k) * arith::sigma(m, k - 1);
}

// Tail majorant in units of y^{N/2} e^{-pi r/2}.
struct TailModel {
    std::vector<double> suffix;  // suffix[m] = sum_{j >= m, j <= m_far} term(j)
    double remainder = 0.0;      // bound for all m > m_far
    long long m_far = 0;
    bool certified = true;

    double tail(long long M) const {
        if (M >= m_far) return remainder;
        return suffix[M + 1] + remainder;
    }
};

TailModel build_tail(int N, const MaassForm& f, double y, double target) {
    const double r = f.r();
    const int k = N / 2;
    const double theta = to_double(f.theta());
    const double kappa = (N == 8 || N == 16) ? 1.0 : 2.0;
    // Analytic remainder: r(m) |A| <= K m^a, |k(r, x)| <= e^{pi r/2} e^{-(sqrt3/2) x} for x >= max(2r, 2).
    const double a = k - 1 + N / 4.0;
    const double s = 2.0 * a + 2.0;
    const double b = std::sqrt(3.0) / 2.0 * 4.0 * kPi * y;
    const double log_K = std::log(2.0 * std::abs(f.c1()) * kappa * eisenstein_factor(k) * special::zeta(k - 1.0));
    auto log_remainder = [&](long long m) {
        double X = b * std::sqrt(static_cast<double>(m));
        return log_K + kPi * r / 2.0 + std::log(2.0) - s * std::log(b) + (s - 1.0) * std::log(X) - X +
               std::log(2.0);
    };
    double x_min = std::max(2.0 * r, 2.0);
    long long m_far = static_cast<long long>(std::ceil(std::pow(x_min / (4.0 * kPi * y), 2)));
    m_far = std::max(m_far, static_cast<long long>(std::ceil(std::pow(2.0 * (s - 1.0) / b, 2))));
    m_far = std::max(m_far, 1LL);
    const double log_target = std::log(1e-3 * target);
    while (log_remainder(m_far) > log_target) m_far += std::max(1LL, m_far / 8);

    TailModel model;
    model.m_far = m_far;
    model.certified = (N == 8 || N == 16) && theta >= 7.0 / 64.0 - 1e-15;
    model.remainder = std::exp(log_remainder(m_far));
    model.suffix.assign(m_far + 2, 0.0);
    for (long long m = m_far; m >= 1; --m) {
        double x = 4.0 * kPi * std::sqrt(static_cast<double>(m)) * y;
        auto kv = bessel::k_scaled_log(r, x);
        double kabs = std::abs(kv.mantissa) * std::exp(kv.log_scale) +
                      kv.error_estimate * std::exp(kv.log_scale);
        double term = shell_count_majorant(N, m) * coefficient_majorant(f, N, m) * kabs * (1.0 + 1e-8);
        model.suffix[m] = model.suffix[m + 1] + term;
    }
    return model;
}

bool is_integral(std::span<const double> x) {
    for (double v : x)
        if (v != std::floor(v)) return false;
    return true;
}

}  // namespace

double coefficient_A(const MaassForm& f, int N, long long m, long long d_lambda) {
    check_rank(N);
    if (m < 1 || d_lambda < 1 || m % (d_lambda * d_lambda) != 0)
        throw DomainError("coefficient_A: need m >= 1 and d_lambda^2 | m");
    double sum = 0.0;
    for (long long d = 1; d <= d_lambda; ++d) {
        if (d_lambda % d != 0) continue;
        sum += f.coefficient(-(m / (d * d))) * std::pow(static_cast<double>(d), N / 2.0 - 2.0);
    }
    return std::sqrt(static_cast<double>(m)) * sum;
}

double coefficient_A(const Lattice& lat, const MaassForm& f, const ShellVector& v) {
    return coefficient_A(f, lat.rank(), v.norm_sq, v.primitivity);
}

double coefficient_bound(const MaassForm& f, int N, long long m, long long d_lambda, double eps0, double constant) {
    check_rank(N);
    if (!f.norm_sq()) throw ValidationError("coefficient_bound needs norm_sq in the form data");
    if (m < 1 || d_lambda < 1 || m % (d_lambda * d_lambda) != 0)
        throw DomainError("coefficient_bound: need m >= 1 and d_lambda^2 | m");
    const double theta = to_double(f.theta());
    const double r = f.r();
    double log_b = (2.0 * theta + 1.0 + eps0) / 2.0 * std::log(static_cast<double>(m)) +
                   (N / 2.0 - 2.0 - 2.0 * theta) * std::log(static_cast<double>(d_lambda)) + eps0 * std::log(r) +
                   0.5 * (kPi * r / 2.0 + std::log1p(std::exp(-kPi * r)) - std::log(2.0)) +
                   0.5 * std::log(*f.norm_sq());
    return constant * std::exp(log_b);
}

double coefficient_majorant(const MaassForm& f, int N, long long m) {
    check_rank(N);
    const double theta = to_double(f.theta());
    double sum = 0.0;
    for (long long e = 1; e * e <= m; ++e) {
        if (m % (e * e) != 0) continue;
        long long n = m / (e * e);
        sum += static_cast<double>(arith::tau(n)) * std::pow(static_cast<double>(n), theta) *
               std::pow(static_cast<double>(e), N / 2.0 - 2.0);
    }
    return std::abs(f.c1()) * std::sqrt(static_cast<double>(m)) * sum;
}

CoefficientTable coefficient_table(const ShellTable& tab, const MaassForm& f) {
    CoefficientTable out;
    out.max_norm = tab.max_norm();
    const int N = tab.lattice().rank();
    for (long long m = 1; m <= tab.max_norm(); ++m) {
        const Shell& s = tab.shell(m);
        std::vector<double> coeffs(s.size());
        std::vector<double> by_d;  // memo per primitivity divisor
        for (std::size_t i = 0; i < s.size(); ++i) {
            long long d = s[i].primitivity;
            if (static_cast<long long>(by_d.size()) <= d) by_d.resize(d + 1, std::nan(""));
            if (std::isnan(by_d[d])) by_d[d] = coefficient_A(f, N, m, d);
            coeffs[i] = by_d[d];
        }
        out.by_shell.push_back(std::move(coeffs));
    }
    return out;
}

double tail_bound(const Lattice& lat, const MaassForm& f, double y, long long M, double tol) {
    const int N = lat.rank();
    TailModel model = build_tail(N, f, y, tol * std::abs(f.c1()));
    return model.tail(M) * std::exp(N / 2.0 * std::log(y) - kPi * f.r() / 2.0);
}

LiftEvaluation evaluate(const Lattice& lat, const MaassForm& f, std::span<const double> x, double y,
                        const EvalOptions& opts) {
    const int N = lat.rank();
    if (static_cast<int>(x.size()) != N)
        throw DomainError("evaluate: x has " + std::to_string(x.size()) + " entries, lattice rank is " +
                          std::to_string(N));
    if (!(y >= opts.y_min) || !std::isfinite(y))
        throw DomainError("evaluate: y = " + std::to_string(y) + " is below y_min = " + std::to_string(opts.y_min));
    if (!(opts.tol > 0.0)) throw DomainError("evaluate: tol must be positive");
    for (double v : x)
        if (!std::isfinite(v)) throw DomainError("evaluate: x must be finite");

    const double r = f.r();
    const double target = opts.tol * std::abs(f.c1());
    TailModel model = build_tail(N, f, y, target);

    const bool integral = is_integral(x);
    long long M = opts.force_M;
    if (M <= 0) {
        M = 1;
        while (model.tail(M) > target) ++M;
    }
    // Budget: number of vectors the enumeration would visit.
    if (!integral) {
        double vectors = 0.0;
        for (long long m = 1; m <= M; ++m) {
            vectors += shell_count_majorant(N, m);
            if (vectors > static_cast<double>(opts.vector_budget)) {
                double achieved = model.tail(m - 1) * std::exp(N / 2.0 * std::log(y) - kPi * r / 2.0);
                throw ConvergenceError("lift evaluate: shell budget of " + std::to_string(opts.vector_budget) +
                                           " vectors exhausted at M = " + std::to_string(m - 1) +
                                           "; tail bound there",
                                       achieved);
            }
        }
    }

    std::vector<double> kval(M + 1, 0.0);
    for (long long m = 1; m <= M; ++m) kval[m] = bessel::k_scaled(r, 4.0 * kPi * std::sqrt(static_cast<double>(m)) * y);
    // A(m, d) for d^2 | m.
    std::vector<std::vector<double>> A(M + 1);
    for (long long m = 1; m <= M; ++m) {
        A[m].assign(static_cast<std::size_t>(std::sqrt(static_cast<double>(m))) + 2, 0.0);
        for (long long d = 1; d * d <= m; ++d)
            if (m % (d * d) == 0) A[m][d] = coefficient_A(f, N, m, d);
    }

    LiftEvaluation out;
    out.x.assign(x.begin(), x.end());
    out.y = y;
    out.truncation_M = M;
    out.log_scale = N / 2.0 * std::log(y) - kPi * r / 2.0;
    out.certified = model.certified;

    ComplexSum total;
    if (integral) {
        ShellCounts counts = shell_counts(lat, M);
        for (long long m = 1; m <= M; ++m) {
            CompensatedSum shell;
            for (long long d = 1; d * d <= m; ++d) {
                long long c = counts.with_divisor(m, d);
                if (c == 0) continue;
                shell.add(static_cast<double>(c) * A[m][d]);
                out.vectors_summed += c;
            }
            total.add(shell.value() * kval[m]);
        }
    } else {
        std::vector<double> sx = lat.apply_gram(x);
        std::vector<ComplexSum> shells(M + 1);
        for_each_vector(lat, M, [&](std::span<const int> v, long long q) {
            double t = 0.0;
            for (int i = 0; i < N; ++i) t += v[i] * sx[i];
            t -= std::round(t);
            int d = coordinate_gcd(v);
            shells[q].add(A[q][d] * std::polar(1.0, 2.0 * kPi * t));
            ++out.vectors_summed;
        });
        for (long long m = 1; m <= M; ++m) total.add(shells[m].value() * kval[m]);
    }
    out.scaled_value = total.value();
    out.value = out.scaled_value * std::exp(out.log_scale);
    out.scaled_tail_bound = model.tail(M);
    out.tail_bound = out.scaled_tail_bound * std::exp(out.log_scale);
    return out;
}

PeriodicityReport periodicity_check(const Lattice& lat, const MaassForm& f, std::span<const double> x, double y,
                                    const EvalOptions& opts) {
    PeriodicityReport rep;
    auto base = evaluate(lat, f, x, y, opts);
    rep.base = base.value;
    EvalOptions fixed = opts;
    fixed.force_M = base.truncation_M;
    std::vector<double> shifted(x.begin(), x.end());
    for (std::size_t j = 0; j < shifted.size(); ++j) {
        shifted[j] += 1.0;
        auto v = evaluate(lat, f, shifted, y, fixed);
        rep.shifted.push_back(v.value);
        rep.max_difference = std::max(rep.max_difference, std::abs(v.value - base.value));
        shifted[j] -= 1.0;
    }
    rep.tolerance = 10.0 * opts.tol * std::abs(f.c1()) * std::exp(base.log_scale);
    rep.passed = rep.max_difference <= rep.tolerance;
    return rep;
}

}  // namespace thetalift::lift
