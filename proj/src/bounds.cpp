#include "thetalift/bounds.hpp"

#include <cmath>
#include <numbers>

#include "thetalift/parallel.hpp"
#include "thetalift/petersson.hpp"

namespace thetalift::bounds {

namespace {

constexpr double kPi = std::numbers::pi;

Rational y0_exponent_of(int N, const Rational& theta) {
    return (Rational(N, 2) + 1 + 2 * theta) / (Rational(N) + 1 + 2 * theta);
}

}  // namespace

std::string_view to_string(FourierPiece piece) {
    switch (piece) {
        case FourierPiece::Low: return "LOW";
        case FourierPiece::Middle: return "MIDDLE";
        case FourierPiece::Exponential: return "EXPONENTIAL";
    }
    return "UNKNOWN";
}

FourierPiece fourier_piece(const SpectralParams& p, double y) {
    if (y > p.r / (2.0 * kPi)) return FourierPiece::Exponential;
    if (y <= std::pow(p.r, 11.0 / 12.0)) return FourierPiece::Low;
    return FourierPiece::Middle;
}

double log_fourier_envelope(const SpectralParams& p, double y, const BoundsConfig& cfg) {
    if (!(y >= 1.0)) throw DomainError("fourier_envelope: needs y >= 1");
    const double N = p.N, theta = to_double(p.theta), lr = std::log(p.r), ly = std::log(y);
    switch (fourier_piece(p, y)) {
        case FourierPiece::Low:
            return (-N / 2.0 - 1.0 - 2.0 * theta) * ly + (3.0 * N / 4.0 + 1.0 + 2.0 * theta + cfg.eps0) * lr;
        case FourierPiece::Middle:
            return (-N / 2.0 + 1.0 - 2.0 * theta) * ly + (3.0 * N / 4.0 - 5.0 / 6.0 + 2.0 * theta + cfg.eps0) * lr;
        case FourierPiece::Exponential:
            return -cfg.decay_rate * y;
    }
    return 0.0;
}

double fourier_envelope(const SpectralParams& p, double y, const BoundsConfig& cfg) {
    return std::exp(log_fourier_envelope(p, y, cfg));
}

double pretrace_envelope(const SpectralParams& p, double ht) {
    if (!(ht >= 1.0)) throw DomainError("pretrace_envelope: needs ht >= 1");
    return std::pow(1.0 + p.r, p.N / 2.0) + std::pow(ht, p.N / 2.0) * std::pow(1.0 + p.r, p.N / 4.0);
}

Rational fourier_exponent_at_y0(int N, const Rational& theta) {
    return Rational(3 * N, 4) + 1 + 2 * theta - (Rational(N, 2) + 1 + 2 * theta) * y0_exponent_of(N, theta);
}

Rational pretrace_exponent_at_y0(int N, const Rational& theta) {
    return Rational(N, 4) + Rational(N, 2) * y0_exponent_of(N, theta);
}

CombinedBound combined_bound(const SpectralParams& p) {
    CombinedBound cb;
    const Rational& theta = p.theta;
    cb.y0_exponent = y0_exponent_of(p.N, theta);
    cb.y0 = std::pow(p.r, to_double(cb.y0_exponent));
    cb.sup_exponent = Rational(p.N, 4) + Rational(p.N) * (1 + 2 * theta) / (8 * (Rational(p.N) + 1 + 2 * theta));
    cb.secondary_exponent = Rational(p.N, 4) + theta / 4 + Rational(1, 8);
    cb.r_exponent = 2 * cb.sup_exponent;
    cb.y0_below_transition = cb.y0_exponent < Rational(11, 12);
    cb.sup_below_secondary = cb.sup_exponent <= cb.secondary_exponent;
    return cb;
}

LowerBound lower_bound(const Lattice& lat, const MaassForm& f) {
    if (count_shells(lat, 1).total[1] == 0)
        throw ValidationError("lower_bound: lattice " + lat.name() + " has no vector of norm 1");
    const int N = lat.rank();
    LowerBound lb;
    lb.log_value = std::log(std::abs(f.c1())) + (N / 2.0 - 1.0 / 3.0) * std::log(f.r()) - kPi * f.r() / 2.0;
    lb.lambda_exponent = Rational(N, 8) + Rational(1, 12);
    return lb;
}

LowerBoundWitness lower_bound_witness(const Lattice& lat, const MaassForm& f, double ymin, double ymax, int points) {
    if (!(ymin > 0.0) || !(ymax > ymin) || points < 2) throw DomainError("lower_bound_witness: bad scan range");
    LowerBound lb = lower_bound(lat, f);
    const int N = lat.rank();
    const double r = f.r();
    const double log_a0 = std::log(std::abs(lift::coefficient_A(f, N, 1, 1)));
    LowerBoundWitness w;
    w.log_prediction = lb.log_value;
    w.log_peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        double y = ymin + (ymax - ymin) * i / (points - 1);
        auto kv = bessel::k_scaled_log(r, 4.0 * kPi * y);
        double log_mode = log_a0 + N / 2.0 * std::log(y) + kv.log_scale + std::log(std::abs(kv.mantissa)) - kPi * r / 2.0;
        w.scan.push_back({y, log_mode});
        if (log_mode > w.log_peak) {
            w.log_peak = log_mode;
            w.y_peak = y;
        }
    }
    w.offset = std::abs(4.0 * kPi * w.y_peak - r) / std::cbrt(r);
    return w;
}

double lift_norm(const Lattice& lat, const MaassForm& f, long long primes) {
    auto nf = petersson::norm_ratio(f, lat.rank(), primes);
    double log_f_sq = f.norm_sq() ? std::log(*f.norm_sq())
                                  : 2.0 * std::log(std::abs(f.c1())) - kPi * f.r() / 2.0 - std::log1p(std::exp(-kPi * f.r())) + std::log(2.0);
    return std::exp(0.5 * (nf.log_ratio + log_f_sq));
}

std::vector<ScanRow> supnorm_scan(const Lattice& lat, const MaassForm& f, double ymin, double ymax, int points,
                                  const ScanOptions& opts) {
    if (!(ymin >= 1.0) || !(ymax >= ymin) || points < 1) throw DomainError("supnorm_scan: need 1 <= ymin <= ymax and points >= 1");
    if (points == 1 && ymax != ymin) throw DomainError("supnorm_scan: a single point needs ymin == ymax");
    const SpectralParams params(f.r(), lat.rank(), f.theta());
    const double norm = lift_norm(lat, f, opts.primes);
    const double log_norm = std::log(norm);
    std::vector<double> x0(lat.rank(), 0.0);
    std::vector<ScanRow> rows(points);
    parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
        double y = points == 1 ? ymin : ymin + (ymax - ymin) * static_cast<double>(i) / (points - 1);
        auto ev = lift::evaluate(lat, f, x0, y, opts.eval);
        ScanRow row;
        row.y = y;
        row.value = std::exp(std::log(std::abs(ev.scaled_value)) + ev.log_scale - log_norm);
        row.fourier_env = fourier_envelope(params, y, opts.bounds);
        row.pretrace_env = pretrace_envelope(params, y);
        row.regime = bessel::to_string(bessel::classify(f.r(), 4.0 * kPi * y, opts.bessel_constants.transition_width));
        row.truncation_M = ev.truncation_M;
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace thetalift::bounds
