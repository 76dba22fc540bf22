#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "thetalift/lattice.hpp"
#include "thetalift/lift.hpp"

using namespace thetalift;
using namespace thetalift::lift;

namespace {

const MaassForm& sample() {
    static const MaassForm f = MaassForm::from_json_file(std::string(THETALIFT_DATA_DIR) + "/forms/sample_even_r27.json");
    return f;
}

}  // namespace

TEST_SUITE("lift") {

TEST_CASE("coefficient examples") {
    MaassForm even(10.0, 1, 2.0, 1.0, {{2, 1.5}, {3, -0.25}});
    MaassForm odd(10.0, -1, 2.0, 1.0, {{2, 1.5}, {3, -0.25}});
    CHECK(coefficient_A(even, 8, 1, 1) == 2.0);
    CHECK(coefficient_A(odd, 8, 1, 1) == -2.0);
    CHECK(coefficient_A(odd, 8, 4, 2) == doctest::Approx(2.0 * -2.0 * (1.5 * 1.5 - 1 + 4)));
    CHECK(coefficient_A(even, 8, 3, 1) == doctest::Approx(std::sqrt(3.0) * 2.0 * -0.25));
    // N = 16: the d^{N/2-2} weight becomes 2^6.
    CHECK(coefficient_A(even, 16, 4, 2) == doctest::Approx(2.0 * 2.0 * (1.5 * 1.5 - 1 + 64)));
    CHECK_THROWS_AS(coefficient_A(even, 8, 5, 1), InsufficientDataError);
}

TEST_CASE("class-function property on every E8 vector with q <= 20") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    std::map<std::pair<long long, int>, double> seen;
    long long mismatches = 0, visited = 0;
    for_each_vector(e8, 20, [&](std::span<const int> v, long long q) {
        ShellVector sv{v, q, coordinate_gcd(v)};
        double a = coefficient_A(e8, f, sv);
        auto [it, fresh] = seen.emplace(std::make_pair(q, sv.primitivity), a);
        if (!fresh && it->second != a) ++mismatches;
        ++visited;
    });
    CHECK(visited == 11'513'520);  // sum of 240 sigma_3(m), m <= 20
    CHECK(mismatches == 0);
    for (const auto& [key, a] : seen) CHECK(a == coefficient_A(f, 8, key.first, key.second));
}

TEST_CASE("coefficient table follows the shell layout") {
    const MaassForm& f = sample();
    auto tab = enumerate_shells(Lattice::builtin("E8"), 4);
    auto ct = coefficient_table(tab, f);
    REQUIRE(ct.by_shell.size() == 4);
    for (long long m = 1; m <= 4; ++m) {
        const Shell& s = tab.shell(m);
        REQUIRE(ct.by_shell[m - 1].size() == s.size());
        for (std::size_t i = 0; i < s.size(); i += 101) CHECK(ct.by_shell[m - 1][i] == coefficient_A(f, 8, m, s[i].primitivity));
    }
}

TEST_CASE("coefficient bound formula") {
    const MaassForm& f = sample();
    const double theta = 7.0 / 64;
    double b11 = coefficient_bound(f, 8, 1, 1, 0.1);
    CHECK(b11 == doctest::Approx(std::pow(f.r(), 0.1) * std::sqrt(std::cosh(M_PI * f.r() / 2) * *f.norm_sq())).epsilon(1e-12));
    CHECK(coefficient_bound(f, 8, 4, 2, 0.1) / coefficient_bound(f, 8, 4, 1, 0.1) ==
          doctest::Approx(std::pow(2.0, 2 - 2 * theta)).epsilon(1e-13));
    CHECK(coefficient_bound(f, 8, 4, 1, 0.1, 3.0) == doctest::Approx(3.0 * coefficient_bound(f, 8, 4, 1, 0.1)));
    CHECK_THROWS_AS(coefficient_bound(MaassForm(10.0, 1, 1.0, std::nullopt, {}), 8, 1, 1, 0.1), ValidationError);
    CHECK_THROWS_AS(coefficient_bound(f, 8, 3, 2, 0.1), DomainError);
}

TEST_CASE("majorant dominates every coefficient class") {
    const MaassForm& f = sample();
    for (long long m = 1; m <= 2000; ++m)
        for (long long d = 1; d * d <= m; ++d)
            if (m % (d * d) == 0) CHECK(std::abs(coefficient_A(f, 8, m, d)) <= coefficient_majorant(f, 8, m) * (1 + 1e-12));
}

TEST_CASE("evaluation at x = 0 is real and scales linearly in c(1)") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    std::vector<double> x(8, 0.0);
    for (double y : {0.6, 1.0, 2.2, 4.0}) {
        auto ev = evaluate(e8, f, x, y);
        CHECK(std::abs(ev.scaled_value.imag()) <= 1e-10 * std::abs(ev.scaled_value));
        auto ev2 = evaluate(e8, f.scaled(-2.5), x, y);
        CHECK(ev2.scaled_value.real() == doctest::Approx(-2.5 * ev.scaled_value.real()).epsilon(1e-14));
        CHECK(ev.certified);
    }
    CHECK_THROWS_AS(evaluate(e8, f, x, 0.3), DomainError);
    std::vector<double> short_x(7, 0.0);
    CHECK_THROWS_AS(evaluate(e8, f, short_x, 1.0), DomainError);
}

TEST_CASE("integral shifts of x give the same value on both evaluation paths") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    std::vector<double> x(8, 0.0), shifted(8, 0.0);
    shifted[2] = 1.0;
    shifted[5] = -3.0;
    auto a = evaluate(e8, f, x, 2.0);
    auto b = evaluate(e8, f, shifted, 2.0);
    CHECK(std::abs(a.scaled_value - b.scaled_value) <= 1e-12 * std::abs(a.scaled_value));
}

TEST_CASE("tail certificate: doubling the cutoff moves the value by at most tail_bound") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(2.0, 5.0);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<double> x(8);
        for (double& c : x) c = ux(rng);
        double y = uy(rng);
        auto ev = evaluate(e8, f, x, y);
        EvalOptions wide;
        wide.force_M = 2 * ev.truncation_M;
        auto ref = evaluate(e8, f, x, y, wide);
        CHECK(std::abs(ref.value - ev.value) <= ev.tail_bound);
        CHECK(ev.scaled_tail_bound <= 1e-10 * std::abs(f.c1()) + 1e-300);
    }
}

TEST_CASE("tail bound decreases in M") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    double prev = tail_bound(e8, f, 1.0, 1);
    for (long long M = 2; M <= 40; ++M) {
        double t = tail_bound(e8, f, 1.0, M);
        CHECK(t <= prev);
        prev = t;
    }
}

TEST_CASE("periodicity under basis shifts") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    std::vector<double> x = {0.1, -0.2, 0.3, 0.05, -0.45, 0.2, 0.0, 0.33};
    auto rep = periodicity_check(e8, f, x, 3.0);
    CHECK(rep.passed);
    CHECK(rep.shifted.size() == 8);
    CHECK(rep.max_difference <= rep.tolerance);
}

TEST_CASE("large y: the value sits under the shell-weighted decay envelope") {
    const MaassForm& f = sample();
    auto e8 = Lattice::builtin("E8");
    std::vector<double> x(8, 0.0);
    // 4 pi y >= 2r from y = r / 2pi on; only the first shell matters and it decays like e^{-4 pi y}.
    double y0 = f.r() / (2 * M_PI);
    auto a = evaluate(e8, f, x, y0);
    auto b = evaluate(e8, f, x, y0 + 1.0);
    double la = std::log(std::abs(a.scaled_value.real())) + a.log_scale;
    double lb = std::log(std::abs(b.scaled_value.real())) + b.log_scale;
    CHECK(lb - la < -0.3);
}

}  // TEST_SUITE
