#include <cmath>
#include <vector>

#include "doctest.h"
#include "frozen_values.hpp"
#include "mpfr_bessel.hpp"
#include "thetalift/bessel.hpp"
#include "thetalift/config.hpp"

using namespace thetalift;
using namespace thetalift::bessel;

TEST_SUITE("bessel") {

TEST_CASE("k_scaled reproduces 50-digit reference values to 1e-10") {
    for (const auto& p : oracle::kBesselPoints) {
        CAPTURE(p.r);
        CAPTURE(p.y);
        CHECK(k_scaled(p.r, p.y) == doctest::Approx(p.k).epsilon(1e-10));
    }
    CHECK(k_scaled(0.0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-14));
}

TEST_CASE("r = 0 agrees with K_0 on [0.01, 30]") {
    for (int i = 0; i < 200; ++i) {
        double y = 0.01 * std::pow(3000.0, i / 199.0);
        CAPTURE(y);
        CHECK(k_scaled(0.0, y) == doctest::Approx(std::cyl_bessel_k(0.0, y)).epsilon(1e-10));
    }
}

TEST_CASE("r = 0 decays monotonically to zero") {
    double prev = k_scaled(0.0, 1.0);
    for (double y = 2.0; y <= 700.0; y *= 1.5) {
        double v = k_scaled(0.0, y);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("second implementation agrees at (5, 5) and across regimes") {
    CHECK(k_scaled(5.0, 5.0) == doctest::Approx(oracle::k_scaled_mpfr(5.0, 5.0)).epsilon(1e-9));
    for (double r : {13.0, 40.0}) {
        for (double y : {0.5 * r, r, 1.5 * r, 3.0 * r}) {
            CAPTURE(r);
            CAPTURE(y);
            CHECK(k_scaled(r, y) == doctest::Approx(oracle::k_scaled_mpfr(r, y)).epsilon(1e-9));
        }
    }
}

TEST_CASE("log-scaled values and underflow") {
    auto kv = k_scaled_log(1.0, 2000.0);
    CHECK(kv.underflow);
    CHECK(k_scaled(1.0, 2000.0) == 0.0);
    CHECK(std::isfinite(kv.log_scale));
    CHECK(kv.mantissa != 0.0);
    // log|K_{i}(2000)| ~ -2000 - log sqrt(2 * 2000 / pi)
    CHECK(kv.log_scale + std::log(std::abs(kv.mantissa)) == doctest::Approx(M_PI / 2 - 2000.0 + 0.5 * std::log(M_PI / 4000.0)).epsilon(1e-6));
    auto ok = k_scaled_log(100.0, 150.0);
    CHECK_FALSE(ok.underflow);
    CHECK(ok.error_estimate <= 1e-8 * ok.l1_norm);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(k_scaled(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(k_scaled(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(k_scaled(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(envelope(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(log_k_majorant(10.0, 5.0), DomainError);
}

TEST_CASE("majorant dominates beyond the turning point") {
    for (double r : {0.0, 5.0, 27.5, 100.0})
        for (double x : {r + 0.5, 1.2 * r + 1, 2.0 * r + 3, 5.0 * r + 10}) {
            auto kv = k_scaled_log(r, x);
            CHECK(kv.log_scale + std::log(std::abs(kv.mantissa)) <= log_k_majorant(r, x) + 1e-12);
        }
}

TEST_CASE("regimes partition (0, inf)") {
    CHECK(classify(100.0, 50.0) == Regime::Oscillatory);
    CHECK(classify(100.0, 100.0) == Regime::Transition);
    CHECK(classify(100.0, 150.0) == Regime::DecayNear);
    CHECK(classify(100.0, 300.0) == Regime::DecayFar);
    CHECK(classify(100.0, 200.0) == Regime::DecayFar);
    CHECK(to_string(Regime::DecayNear) == "DECAY_NEAR");
    // Boundaries sit at r -+ r^{1/3} and 2r, each regime is an interval.
    for (double r : {10.0, 50.0, 100.0}) {
        int prev = 0;
        for (double y = 0.01; y < 5 * r; y += 0.01) {
            int cur = static_cast<int>(classify(r, y));
            CHECK(cur >= prev);
            prev = cur;
        }
        CHECK(classify(r, r - std::cbrt(r) - 1e-9) == Regime::Oscillatory);
        CHECK(classify(r, r - std::cbrt(r) + 1e-9) == Regime::Transition);
    }
}

TEST_CASE("envelope formulas") {
    EnvelopeConstants c;
    CHECK(envelope(100.0, 300.0) == doctest::Approx(c.c5 * std::exp(-300.0 * c.c6)));
    CHECK(envelope(100.0, 100.0) == doctest::Approx(c.c2 * std::pow(100.0, -1.0 / 3)));
    CHECK(envelope(100.0, 50.0) == doctest::Approx(c.c1 * std::pow(100.0, -0.25) * std::pow(50.0, -0.25)));
    double d = 50.0;
    CHECK(envelope(100.0, 150.0) ==
          doctest::Approx(c.c3 * std::pow(100.0, -0.25) * std::pow(d, -0.25) * std::exp(-c.c4 * std::pow(d, 1.5) / 10.0)));
}

TEST_CASE("frozen envelopes dominate on the 3000-point calibration grid") {
    int violations = 0;
    for (double r : {50.0, 100.0, 200.0})
        for (int i = 0; i < 1000; ++i) {
            double y = std::pow(4.0 * r, i / 999.0);
            double ratio = std::abs(k_scaled(r, y)) / envelope(r, y);
            if (ratio > 1.0) {
                ++violations;
                MESSAGE("violation r=" << r << " y=" << y << " ratio=" << ratio);
            }
        }
    CHECK(violations == 0);
}

TEST_CASE("transition size lies in the frozen interval") {
    Config cfg;
    for (double r : {50.0, 100.0, 200.0}) {
        double s = std::cbrt(r), best = 0.0;
        for (int i = 0; i <= 800; ++i) best = std::max(best, std::abs(k_scaled(r, r - s + 2 * s * i / 800.0)) * s);
        CAPTURE(r);
        CHECK(best >= cfg.transition_lower);
        CHECK(best <= cfg.transition_upper);
    }
    CHECK(cfg.transition_upper < 4.0 * cfg.transition_lower);
}

TEST_CASE("Airy function of complex argument") {
    for (const auto& p : oracle::kAiryPoints) {
        auto v = airy_ai({p.re, p.im});
        double scale = std::max(1e-300, std::hypot(p.ai_re, p.ai_im));
        CAPTURE(p.re);
        CAPTURE(p.im);
        CHECK(std::abs(v - std::complex<double>(p.ai_re, p.ai_im)) / scale <= 1e-8);
    }
}

TEST_CASE("transition approximation") {
    const double ai0 = std::pow(3.0, -2.0 / 3) / std::tgamma(2.0 / 3);
    for (double r : {50.0, 100.0}) {
        auto a = airy_transition(r, r);
        CHECK(a.value == doctest::Approx(M_PI * std::cbrt(2.0 / r) * ai0).epsilon(1e-12));
    }
    for (double y : {100.0, 100.0 + std::cbrt(100.0), 100.0 - std::cbrt(100.0)})
        CHECK(std::abs(airy_transition(100.0, y).value - k_scaled(100.0, y)) <= 5.0 * std::pow(y, -2.0 / 3));
    CHECK_THROWS_AS(airy_transition(100.0, 110.0), DomainError);
}

}  // TEST_SUITE
