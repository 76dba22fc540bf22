#include "thetalift/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

#include "thetalift/arith.hpp"
#include "thetalift/bessel.hpp"
#include "thetalift/bounds.hpp"
#include "thetalift/error.hpp"
#include "thetalift/lattice.hpp"
#include "thetalift/lift.hpp"
#include "thetalift/parallel.hpp"
#include "thetalift/petersson.hpp"

namespace thetalift {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

CheckResult shells() {
    Lattice e8 = Lattice::builtin("E8");
    auto counts = count_shells(e8, 12);
    for (long long m = 1; m <= 12; ++m) {
        long long expected = 240 * static_cast<long long>(std::llround(arith::sigma(m, 3)));
        if (counts.total[m] != expected)
            return {"shells", false, "E8 shell " + std::to_string(m) + ": " + std::to_string(counts.total[m]) +
                                         " vectors, expected " + std::to_string(expected)};
    }
    auto tab = enumerate_shells(e8, 3);
    for (long long m = 1; m <= 3; ++m) {
        const Shell& s = tab.shell(m);
        if (static_cast<long long>(s.size()) != counts.total[m]) return {"shells", false, "enumeration disagrees with counting"};
        // Sorted lexicographically, so v and -v sit at mirrored positions.
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto v = s[i].coords;
            auto w = s[s.size() - 1 - i].coords;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != -w[j]) return {"shells", false, "shell not closed under negation"};
        }
    }
    auto d16 = count_shells(Lattice::builtin("D16plus"), 3);
    auto ee = count_shells(Lattice::builtin("E8xE8"), 3);
    auto eis = eisenstein_shell_counts(16, 3);
    for (long long m = 1; m <= 3; ++m)
        if (d16.total[m] != eis.total[m] || ee.total[m] != eis.total[m])
            return {"shells", false, "rank 16 shell counts differ from 480 sigma_7"};
    return {"shells", true, "E8 m<=12 = 240 sigma_3, +- closed; D16+ and E8xE8 m<=3 = 480 sigma_7"};
}

CheckResult bessel_envelopes(const Config& cfg, int threads) {
    std::vector<std::pair<double, double>> grid;
    for (double r : {50.0, 100.0, 200.0})
        for (int i = 0; i < 1000; ++i) grid.emplace_back(r, std::pow(4.0 * r, i / 999.0));
    std::vector<double> ratio(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        auto [r, y] = grid[i];
        ratio[i] = std::abs(bessel::k_scaled(r, y)) / bessel::envelope(r, y, cfg.bessel_constants);
    });
    std::size_t bad = 0;
    double worst = 0.0;
    for (double q : ratio) {
        bad += q > 1.0;
        worst = std::max(worst, q);
    }
    return {"bessel_envelopes", bad == 0,
            fmt("%.0f violations on 3000 points, max ratio %.6g", static_cast<double>(bad), worst)};
}

CheckResult transition_law(const Config& cfg) {
    double lo = 1e300, hi = 0.0;
    for (double r : {50.0, 100.0, 200.0}) {
        const double s = std::cbrt(r);
        double best = 0.0;
        for (int i = 0; i <= 400; ++i) best = std::max(best, std::abs(bessel::k_scaled(r, r - s + 2.0 * s * i / 400.0)) * s);
        lo = std::min(lo, best);
        hi = std::max(hi, best);
    }
    bool ok = lo >= cfg.transition_lower && hi <= cfg.transition_upper && cfg.transition_upper < 4.0 * cfg.transition_lower;
    return {"transition_law", ok, fmt("max k r^{1/3} in [%.6g, %.6g]", lo, hi)};
}

CheckResult gamma_identities() {
    double worst = 0.0;
    for (int N : {8, 16, 24})
        for (int i = 0; i <= 40; ++i) {
            double r = 5.0 * i;
            double a = petersson::log_abs_gamma_sq_product(N, r);
            double b = petersson::log_abs_gamma_sq_complex(N, r);
            worst = std::max(worst, std::abs(std::expm1(a - b)));
            double u = petersson::arch_factor_unsimplified(N, r);
            worst = std::max(worst, std::abs(u / petersson::arch_factor(N, r) - 1.0));
        }
    auto beta = petersson::beta_oracle({1.0, 0.0}, {1.0, 0.0});
    auto half = petersson::beta_oracle({0.5, 0.0}, {0.5, 0.0});
    bool ok = worst <= 1e-10 && beta.discrepancy <= 1e-8 && std::abs(half.closed_form - kPi) <= 1e-12 &&
              half.discrepancy <= 1e-8;
    return {"gamma_identities", ok, fmt("max relative deviation %.3g, beta oracle %.3g", worst,
                                        std::max(beta.discrepancy, half.discrepancy))};
}

CheckResult exponent_algebra() {
    using R = Rational;
    auto cb = bounds::combined_bound(SpectralParams(100.0, 8));
    if (cb.y0_exponent != R(167, 295) || cb.sup_exponent != 2 + R(39, 295))
        return {"exponent_algebra", false, "N=8 exponents differ from 167/295 and 2+39/295"};
    if (!(cb.sup_exponent <= 2 + R(7, 256) + R(1, 8))) return {"exponent_algebra", false, "secondary bound violated"};
    for (int N = 8; N <= 64; N += 8)
        for (int t = 0; t < 64; ++t) {
            R theta(t, 256);
            auto c = bounds::combined_bound(SpectralParams(100.0, N, theta));
            if (!c.y0_below_transition || !c.sup_below_secondary)
                return {"exponent_algebra", false, "inequality fails at N=" + std::to_string(N)};
            R common = R(N, 2) + R(N) * (1 + 2 * theta) / (4 * (R(N) + 1 + 2 * theta));
            if (bounds::fourier_exponent_at_y0(N, theta) != common || bounds::pretrace_exponent_at_y0(N, theta) != common)
                return {"exponent_algebra", false, "envelopes do not meet at y0 for N=" + std::to_string(N)};
        }
    if (bounds::lower_bound(Lattice::builtin("E8"), MaassForm(10.0, 1, 1.0, std::nullopt, {})).lambda_exponent != R(13, 12))
        return {"exponent_algebra", false, "lower bound exponent is not 13/12"};
    return {"exponent_algebra", true, "exact over N in 8..64, theta in [0, 1/4)"};
}

CheckResult form_data(const Config& cfg, const MaassForm& f) {
    if (f.max_prime() < 2) return {"form_data", true, "no Hecke data; skipped"};
    long long M = std::min<long long>(f.max_prime(), 10000);
    auto rep = ramanujan_check(f, M);
    std::string detail = fmt("Ramanujan-type bound on m <= %.0f, max ratio %.6g", static_cast<double>(M), rep.max_ratio);
    bool ok = rep.passed;
    if (f.norm_sq()) {
        auto w = c1_envelope(f, cfg.epsilon0);
        ok = ok && w.within(100.0);
        detail += fmt("; |c1|^2/||f||^2 / cosh(pi r/2) = %.4g", w.measured / std::cosh(kPi * f.r() / 2.0));
    }
    return {"form_data", ok, detail};
}

CheckResult coefficient_bounds(const Config& cfg, const MaassForm& f) {
    if (!f.norm_sq()) return {"coefficient_bounds", true, "form has no norm_sq; skipped"};
    // Largest M <= 10^4 such that every prime up to M has an eigenvalue.
    long long M = 10000;
    for (long long p : arith::primes_up_to(10000))
        if (!f.hecke().count(p)) {
            M = p - 1;
            break;
        }
    if (M < 1) return {"coefficient_bounds", true, "no Hecke data; skipped"};
    Lattice e8 = Lattice::builtin("E8");
    auto counts = shell_counts(e8, M);
    double worst = 0.0;
    for (long long m = 1; m <= M; ++m)
        for (long long d = 1; d * d <= m; ++d) {
            if (m % (d * d) != 0 || counts.with_divisor(m, d) == 0) continue;
            double ratio = std::abs(lift::coefficient_A(f, 8, m, d)) /
                           lift::coefficient_bound(f, 8, m, d, cfg.epsilon0, cfg.coefficient_constant);
            worst = std::max(worst, ratio);
        }
    return {"coefficient_bounds", worst <= 1.0,
            fmt("E8 classes with m <= %.0f, max |A|/bound %.6g", static_cast<double>(M), worst)};
}

CheckResult norm_invariance(const MaassForm& f) {
    if (f.max_prime() < 100) return {"norm_ratio", true, "needs Hecke data up to 100; skipped"};
    auto a = petersson::norm_ratio(f, 8, 100);
    auto b = petersson::norm_ratio(f.scaled(3.7), 8, 100);
    double dev = std::abs(a.ratio / b.ratio - 1.0);
    return {"norm_ratio", dev <= 1e-12 && a.ratio > 0.0, fmt("c(1) invariance %.3g, ratio %.6g", dev, a.ratio)};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const Config& cfg, const MaassForm& form, int threads) {
    std::vector<std::function<CheckResult()>> checks = {
        [] { return shells(); },
        [&] { return bessel_envelopes(cfg, threads); },
        [&] { return transition_law(cfg); },
        [] { return gamma_identities(); },
        [] { return exponent_algebra(); },
        [&] { return form_data(cfg, form); },
        [&] { return coefficient_bounds(cfg, form); },
        [&] { return norm_invariance(form); },
    };
    const char* names[] = {"shells", "bessel_envelopes", "transition_law", "gamma_identities",
                           "exponent_algebra", "form_data", "coefficient_bounds", "norm_ratio"};
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        try {
            out.push_back(checks[i]());
        } catch (const std::exception& e) {
            out.push_back({names[i], false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

}  // namespace thetalift
