#include <cmath>

#include "doctest.h"
#include "thetalift/bounds.hpp"
#include "thetalift/config.hpp"

using namespace thetalift;
using namespace thetalift::bounds;

namespace {

const MaassForm& sample() {
    static const MaassForm f = MaassForm::from_json_file(std::string(THETALIFT_DATA_DIR) + "/forms/sample_even_r27.json");
    return f;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("Fourier envelope pieces and boundaries") {
    // With r below (2 pi)^12, r^{11/12} exceeds r/2pi and the middle piece is empty.
    SpectralParams p(100.0, 8);
    const double t1 = std::pow(100.0, 11.0 / 12), t2 = 100.0 / (2 * M_PI);
    CHECK(t1 > t2);
    CHECK(fourier_piece(p, 1.0) == FourierPiece::Low);
    CHECK(fourier_piece(p, t2 * 0.999) == FourierPiece::Low);
    CHECK(fourier_piece(p, t2 * 1.001) == FourierPiece::Exponential);
    // At r = 1e14 all three pieces appear, boundaries r^{11/12} < r / 2 pi.
    SpectralParams big(1e14, 8);
    CHECK(fourier_piece(big, std::pow(1e14, 11.0 / 12) * 0.99) == FourierPiece::Low);
    CHECK(fourier_piece(big, std::pow(1e14, 11.0 / 12) * 1.01) == FourierPiece::Middle);
    CHECK(fourier_piece(big, 1e14 / (2 * M_PI) * 1.01) == FourierPiece::Exponential);
    CHECK(to_string(FourierPiece::Middle) == "MIDDLE");
    CHECK_THROWS_AS(fourier_envelope(p, 0.5), DomainError);
}

TEST_CASE("low and middle pieces meet at y = r^{11/12}") {
    const double theta = 7.0 / 64, eps = 0.1;
    for (double r : {1e13, 1e14, 1e16}) {
        SpectralParams p(r, 8);
        double y = std::pow(r, 11.0 / 12);
        double low = (-4 - 1 - 2 * theta) * std::log(y) + (6 + 1 + 2 * theta + eps) * std::log(r);
        double mid = (-4 + 1 - 2 * theta) * std::log(y) + (6 - 5.0 / 6 + 2 * theta + eps) * std::log(r);
        CHECK(low == doctest::Approx(mid).epsilon(1e-12));
        CHECK(log_fourier_envelope(p, y * (1 - 1e-12)) == doctest::Approx(low).epsilon(1e-9));
        CHECK(log_fourier_envelope(p, y * (1 + 1e-12)) == doctest::Approx(mid).epsilon(1e-9));
    }
}

TEST_CASE("Fourier envelope is non-increasing on a log grid over [1, 3r]") {
    for (double r : {10.0, 27.5, 100.0, 1e14}) {
        SpectralParams p(r, 8);
        double prev = log_fourier_envelope(p, 1.0);
        for (int i = 1; i <= 2000; ++i) {
            double y = std::pow(3 * r, i / 2000.0);
            double cur = log_fourier_envelope(p, y);
            CAPTURE(r);
            CAPTURE(y);
            CHECK(cur <= prev + 1e-12 * std::abs(prev));
            prev = cur;
        }
    }
}

TEST_CASE("pre-trace envelope") {
    SpectralParams p(50.0, 8);
    CHECK(pretrace_envelope(p, 1.0) == doctest::Approx(std::pow(51.0, 4) * (1 + std::pow(51.0, -2))).epsilon(1e-14));
    double prev = 0.0;
    for (double ht = 1.0; ht < 100.0; ht *= 1.3) {
        double v = pretrace_envelope(p, ht);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(pretrace_envelope(p, 0.9), DomainError);
}

TEST_CASE("combined bound exponents are exact rationals") {
    auto cb = combined_bound(SpectralParams(40.0, 8));
    CHECK(cb.y0_exponent == Rational(167, 295));
    CHECK(cb.sup_exponent == 2 + Rational(39, 295));
    CHECK(cb.secondary_exponent == 2 + Rational(7, 256) + Rational(1, 8));
    CHECK(cb.sup_exponent <= cb.secondary_exponent);
    CHECK(cb.y0_exponent < Rational(11, 12));
    CHECK(cb.y0 == doctest::Approx(std::pow(40.0, 167.0 / 295)));
    CHECK(cb.r_exponent == 2 * cb.sup_exponent);
    // Common r-exponent at y0: N/2 + N(1+2theta)/(4(N+1+2theta)) = 4.26441...
    CHECK(to_double(fourier_exponent_at_y0(8, Rational(7, 64))) == doctest::Approx(4.26441).epsilon(1e-6));
    CHECK(fourier_exponent_at_y0(8, Rational(7, 64)) == pretrace_exponent_at_y0(8, Rational(7, 64)));
    CHECK(fourier_exponent_at_y0(8, Rational(7, 64)) == cb.r_exponent);
}

TEST_CASE("theta = 0 limit and the parameter grid") {
    for (int N = 8; N <= 48; N += 8) {
        auto cb = combined_bound(SpectralParams(40.0, N, Rational(0)));
        CHECK(cb.sup_exponent == Rational(N, 4) + Rational(N, 8 * (N + 1)));
        for (int t = 0; t < 50; ++t) {
            Rational theta(t, 200);
            auto c = combined_bound(SpectralParams(40.0, N, theta));
            CHECK(c.y0_exponent < Rational(11, 12));
            CHECK(c.sup_below_secondary);
            CHECK(fourier_exponent_at_y0(N, theta) == pretrace_exponent_at_y0(N, theta));
        }
    }
}

TEST_CASE("lower bound") {
    auto e8 = Lattice::builtin("E8");
    MaassForm f(40.0, 1, 2.0, std::nullopt, {});
    auto lb = lower_bound(e8, f);
    CHECK(lb.lambda_exponent == Rational(13, 12));
    CHECK(lb.log_value == doctest::Approx(std::log(2.0) + (4 - 1.0 / 3) * std::log(40.0) - M_PI * 20));
    auto d16 = Lattice::builtin("D16plus");
    CHECK(lower_bound(d16, f).lambda_exponent == Rational(2) + Rational(1, 12));
}

TEST_CASE("witness at r = 40 peaks in the transition window above the fitted prediction") {
    Config cfg;
    auto e8 = Lattice::builtin("E8");
    MaassForm f(40.0, 1, 1.0, std::nullopt, {});
    const double s = std::cbrt(40.0);
    auto w = lower_bound_witness(e8, f, (40.0 - s) / (4 * M_PI), (40.0 + s) / (4 * M_PI), 401);
    CHECK(w.log_peak >= std::log(cfg.witness_constant) + w.log_prediction);
    CHECK(w.offset <= 3.0);
    CHECK(w.scan.size() == 401);
}

TEST_CASE("sup-norm scan on the sample form") {
    Config cfg;
    auto e8 = Lattice::builtin("E8");
    const MaassForm& f = sample();
    ScanOptions opts;
    auto rows = supnorm_scan(e8, f, 1.0, 20.0, 400, opts);
    REQUIRE(rows.size() == 400);
    for (const auto& row : rows) {
        CAPTURE(row.y);
        CHECK(row.value <= cfg.scan_constant * std::min(row.fourier_env, row.pretrace_env));
    }
    // Exponential regime: log-linear fit of the tail y > r/2pi has negative slope.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : rows)
        if (row.y > f.r() / (2 * M_PI)) {
            double ly = std::log(row.value);
            sx += row.y;
            sy += ly;
            sxx += row.y * row.y;
            sxy += row.y * ly;
            ++n;
        }
    REQUIRE(n > 10);
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope < 0.0);
    // Threads do not change the output.
    ScanOptions par = opts;
    par.threads = 3;
    auto again = supnorm_scan(e8, f, 1.0, 20.0, 400, par);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].value == rows[i].value);
    CHECK_THROWS_AS(supnorm_scan(e8, f, 0.5, 2.0, 10), DomainError);
}

}  // TEST_SUITE

TEST_SUITE("scan_peak") {

TEST_CASE("peak location of the measured scan curve") {
    // Argmax of |F(0, y)| / ||F|| over the scan, compared with the transition
    // window of the norm-1 shell, |4 pi y - r| <= r^{1/3}.
    auto e8 = Lattice::builtin("E8");
    const MaassForm& f = sample();
    auto rows = supnorm_scan(e8, f, 1.0, 20.0, 400);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].value > rows[arg].value) arg = i;
    CAPTURE(rows[arg].y);
    CHECK(std::abs(4 * M_PI * rows[arg].y - f.r()) <= std::cbrt(f.r()));
}

}  // TEST_SUITE
