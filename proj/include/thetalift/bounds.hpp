#pragma once

#include <string>
#include <vector>

#include "thetalift/bessel.hpp"
#include "thetalift/lattice.hpp"
#include "thetalift/lift.hpp"
#include "thetalift/maass.hpp"

namespace thetalift::bounds {

struct BoundsConfig {
    double eps0 = 0.1;
    /// Rate C of the exponential piece e^{-C y} (the DECAY_FAR constant of the Bessel envelope).
    double decay_rate = bessel::EnvelopeConstants{}.c6;
};

enum class FourierPiece { Low, Middle, Exponential };

std::string_view to_string(FourierPiece piece);

/// Active piece at height y: y > r/2pi is exponential, otherwise y <= r^{11/12}
/// is the low piece and the rest the middle piece. When r^{11/12} >= r/2pi
/// (every r below (2pi)^{12}) the middle piece is empty.
FourierPiece fourier_piece(const SpectralParams& p, double y);

/// Piecewise Fourier-side envelope:
///   y^{-N/2-1-2theta} r^{3N/4+1+2theta+eps}      (low),
///   y^{-N/2+1-2theta} r^{3N/4-5/6+2theta+eps}    (middle),
///   e^{-C y}                                     (exponential).
double log_fourier_envelope(const SpectralParams& p, double y, const BoundsConfig& cfg = {});
double fourier_envelope(const SpectralParams& p, double y, const BoundsConfig& cfg = {});

/// (1+r)^{N/2} + ht^{N/2} (1+r)^{N/4}.
double pretrace_envelope(const SpectralParams& p, double ht);

/// Exact exponent bookkeeping of the sup-norm combination.
struct CombinedBound {
    Rational y0_exponent;        ///< (N/2+1+2theta)/(N+1+2theta)
    double y0 = 0.0;             ///< r^{y0_exponent}
    Rational sup_exponent;       ///< N/4 + N(1+2theta)/(8(N+1+2theta)), in Lambda
    Rational secondary_exponent; ///< N/4 + theta/4 + 1/8
    Rational r_exponent;         ///< 2 sup_exponent, the common r-exponent at y0
    bool y0_below_transition = false;  ///< y0_exponent < 11/12
    bool sup_below_secondary = false;
};

CombinedBound combined_bound(const SpectralParams& p);

/// r-exponent of the low Fourier piece at y = r^{y0_exponent}:
/// 3N/4+1+2theta - (N/2+1+2theta) y0_exponent.
Rational fourier_exponent_at_y0(int N, const Rational& theta);
/// r-exponent of the ht-term of the pre-trace envelope at ht = y0: N/4 + (N/2) y0_exponent.
Rational pretrace_exponent_at_y0(int N, const Rational& theta);

struct LowerBound {
    double log_value = 0.0;  ///< log(|c(1)| r^{N/2-1/3} e^{-pi r/2})
    Rational lambda_exponent;  ///< N/8 + 1/12
};

/// Lower bound |c(1)| r^{N/2-1/3} e^{-pi r/2}; the lattice must have a vector of norm 1.
LowerBound lower_bound(const Lattice& lat, const MaassForm& f);

struct WitnessPoint {
    double y = 0.0;
    double log_mode = 0.0;  ///< log |A(lambda0) y^{N/2} K_{ir}(4 pi y)|
};

struct LowerBoundWitness {
    std::vector<WitnessPoint> scan;
    double y_peak = 0.0;
    double log_peak = 0.0;
    double log_prediction = 0.0;  ///< LowerBound::log_value
    double offset = 0.0;          ///< |4 pi y_peak - r| / r^{1/3}
};

/// Scans the norm-1 Fourier mode, which bounds ||F_f||_inf from below,
/// over `points` heights y in [ymin, ymax].
LowerBoundWitness lower_bound_witness(const Lattice& lat, const MaassForm& f, double ymin, double ymax, int points);

struct ScanRow {
    double y = 0.0;
    double value = 0.0;  ///< |F_f(0, y)| / ||F_f||_2
    double fourier_env = 0.0;
    double pretrace_env = 0.0;
    std::string regime;  ///< Bessel regime of 4 pi y against r (the norm-1 shell)
    long long truncation_M = 0;
};

struct ScanOptions {
    lift::EvalOptions eval;
    BoundsConfig bounds;
    bessel::EnvelopeConstants bessel_constants;
    long long primes = 100;  ///< Euler product truncation for ||F_f||_2
    int threads = 1;
};

/// ||F_f||_2 from the norm ratio and ||f||_2; without norm_sq the proxy
/// ||f||^2 = |c(1)|^2 / cosh(pi r/2) is used.
double lift_norm(const Lattice& lat, const MaassForm& f, long long primes);

/// Evaluates F_f(0, y) on a uniform grid of `points` heights in [ymin, ymax].
std::vector<ScanRow> supnorm_scan(const Lattice& lat, const MaassForm& f, double ymin, double ymax, int points,
                                  const ScanOptions& opts = {});

}  // namespace thetalift::bounds
