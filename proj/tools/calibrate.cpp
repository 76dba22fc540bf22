// Measures the implied constants on the calibration grids and prints the
// values to freeze into the defaults (observed extremes and the values with
// safety factors applied).
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "thetalift/arith.hpp"
#include "thetalift/bessel.hpp"
#include "thetalift/bounds.hpp"
#include "thetalift/config.hpp"
#include "thetalift/lattice.hpp"
#include "thetalift/lift.hpp"
#include "thetalift/maass.hpp"

using namespace thetalift;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> log_uniform(double a, double b, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
    return out;
}

void bessel_constants() {
    bessel::EnvelopeConstants unit{1, 1, 1, 0.6, 1, 0.3, 1};
    double worst[4] = {0, 0, 0, 0};
    for (double r : {50.0, 100.0, 200.0}) {
        for (double y : log_uniform(1.0, 4.0 * r, 1000)) {
            double k = std::abs(bessel::k_scaled(r, y));
            int reg = static_cast<int>(bessel::classify(r, y, unit.transition_width));
            worst[reg] = std::max(worst[reg], k / bessel::envelope(r, y, unit));
        }
    }
    std::printf("bessel observed C1 %.6g C2 %.6g C3 %.6g C5 %.6g (C4 = 0.6, C6 = 0.3)\n", worst[0], worst[1], worst[2],
                worst[3]);
    std::printf("bessel frozen   C1 %.3g C2 %.3g C3 %.3g C5 %.3g\n", 2 * worst[0], 2 * worst[1], 2 * worst[2], 2 * worst[3]);
}

void transition() {
    double lo = 1e300, hi = 0;
    for (double r : {50.0, 100.0, 200.0}) {
        double s = std::cbrt(r), best = 0;
        for (int i = 0; i <= 4000; ++i) {
            double y = r - s + 2 * s * i / 4000.0;
            best = std::max(best, std::abs(bessel::k_scaled(r, y)) * s);
        }
        std::printf("transition r=%g max k r^{1/3} = %.10g\n", r, best);
        lo = std::min(lo, best);
        hi = std::max(hi, best);
    }
    std::printf("transition frozen c %.4g C %.4g\n", lo / 1.25, hi * 1.25);
}

void lemma63() {
    Lattice e8 = Lattice::builtin("E8");
    auto counts = shell_counts(e8, 2000);
    const double k = 3.0, eps = 0.1;
    double worst = 0;
    for (double kp : {0.5, 1.0, 2.0, 3.0})
        for (long long m = 1; m <= 2000; ++m)
            worst = std::max(worst, shell_divisor_sum(counts, m, k - kp) / std::pow(m, k + eps));
    std::printf("lemma 6.3 observed C %.8g frozen %.4g\n", worst, 2 * worst);
}

void coefficients(const MaassForm& f) {
    Lattice e8 = Lattice::builtin("E8");
    auto counts = shell_counts(e8, 10000);
    double worst = 0;
    for (long long m = 1; m <= 10000; ++m)
        for (long long d = 1; d * d <= m; ++d) {
            if (m % (d * d) != 0 || counts.with_divisor(m, d) == 0) continue;
            double a = std::abs(lift::coefficient_A(f, 8, m, d));
            worst = std::max(worst, a / lift::coefficient_bound(f, 8, m, d, 0.1));
        }
    std::printf("coefficient observed %.8g frozen %.4g\n", worst, 2 * worst);
}

void scan(const MaassForm& f) {
    Lattice e8 = Lattice::builtin("E8");
    auto rows = bounds::supnorm_scan(e8, f, 1.0, 20.0, 400);
    double worst = 0;
    for (const auto& row : rows) worst = std::max(worst, row.value / std::min(row.fourier_env, row.pretrace_env));
    std::printf("scan observed %.8g frozen %.4g\n", worst, 2 * worst);
}

void witness(const MaassForm& sample) {
    Lattice e8 = Lattice::builtin("E8");
    double worst = 1e300;
    for (double r : {10.0, 20.0, 40.0, sample.r()}) {
        MaassForm f = r == sample.r() ? sample : MaassForm(r, 1, 1.0, std::nullopt, {});
        double s = std::cbrt(r);
        auto w = bounds::lower_bound_witness(e8, f, (r - 3 * s) / (4 * kPi), (r + 3 * s) / (4 * kPi), 601);
        double ratio = std::exp(w.log_peak - w.log_prediction);
        std::printf("witness r=%g ratio %.8g offset %.4g\n", r, ratio, w.offset);
        worst = std::min(worst, ratio);
    }
    std::printf("witness frozen %.4g\n", worst / 2);
}

}  // namespace

int main(int argc, char** argv) {
    std::string form_path = argc > 1 ? argv[1] : std::string(THETALIFT_DATA_DIR) + "/forms/sample_even_r27.json";
    MaassForm f = MaassForm::from_json_file(form_path);
    bessel_constants();
    transition();
    lemma63();
    coefficients(f);
    witness(f);
    scan(f);
}
