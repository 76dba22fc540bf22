#pragma once

#include <optional>
#include <string>

#include "thetalift/bessel.hpp"
#include "thetalift/bounds.hpp"
#include "thetalift/lift.hpp"
#include "thetalift/maass.hpp"

namespace thetalift {

/// Run-time configuration. Every field has a default; a JSON file may
/// override any subset:
///
///   { "epsilon0": 0.1, "theta": "7/64", "r_min": 1,
///     "bessel_constants": {"c1": .., ..., "c6": .., "transition_width": 1},
///     "quadrature": {"rel_tol": 1e-13, "max_rel_error": 1e-8},
///     "lift": {"tol": 1e-10, "y_min": 0.5, "shell_budget": 200000000},
///     "fitted": {"coefficient": .., "scan": .., "witness": ..,
///                "transition_lower": .., "transition_upper": ..,
///                "shell_divisor": ..},
///     "format": "json", "threads": 0 }
struct Config {
    double epsilon0 = 0.1;
    Rational theta{7, 64};
    double r_min = 1.0;
    bessel::EnvelopeConstants bessel_constants;
    bessel::QuadratureOptions quadrature;
    double lift_tol = 1e-10;
    double y_min = 0.5;
    long long shell_budget = 200'000'000;

    /// Implied constants made explicit, measured by tools/calibrate.cpp
    /// (safety factor 2, or 1.25 for the transition interval); see README.
    double coefficient_constant = 5.4;      ///< |A(lambda)| <= C * coefficient_bound
    double scan_constant = 0.0033;          ///< |F|/||F|| <= C * min(envelopes)
    double witness_constant = 2.8e-5;       ///< peak >= C * |c(1)| r^{N/2-1/3} e^{-pi r/2}
    double transition_lower = 1.704;        ///< max k r^{1/3} over the strip >= this
    double transition_upper = 2.682;        ///< ... and <= this
    double shell_divisor_constant = 507.0;  ///< shell_divisor_sum(m, k-k') <= C m^{k+eps0}

    std::string format = "json";
    int threads = 0;  ///< 0: all cores

    FormOptions form_options() const { return {theta, r_min}; }
    lift::EvalOptions eval_options() const;
    bounds::BoundsConfig bounds_config() const;

    /// Throws ValidationError for malformed or out-of-range settings.
    void validate() const;

    static Config from_json_text(const std::string& text);
    static Config from_json_file(const std::string& path);
    /// Reads `path` if given, otherwise $THETALIFT_CONFIG if set, otherwise defaults.
    static Config load(const std::optional<std::string>& path);
};

/// Parses "p/q" or an integer into a rational.
Rational parse_rational(const std::string& text);

/// Fixed 17-significant-digit rendering used by every output path.
std::string format_double(double v);

}  // namespace thetalift
