#pragma once

#include <complex>
#include <span>
#include <vector>

#include "thetalift/bessel.hpp"
#include "thetalift/lattice.hpp"
#include "thetalift/maass.hpp"

namespace thetalift::lift {

/// A(lambda) = sqrt(m) sum_{d | d_lambda} c(-m/d^2) d^{N/2-2} for q(lambda) = m.
double coefficient_A(const MaassForm& f, int N, long long m, long long d_lambda);
double coefficient_A(const Lattice& lat, const MaassForm& f, const ShellVector& v);

/// m^{(2theta+1+eps0)/2} d^{N/2-2-2theta} r^{eps0} sqrt(cosh(pi r/2)) ||f||, times `constant`.
/// Throws ValidationError when the form has no norm_sq.
double coefficient_bound(const MaassForm& f, int N, long long m, long long d_lambda, double eps0,
                         double constant = 1.0);

/// Majorant |c(1)| sqrt(m) sum_{e^2 | m} tau(m/e^2) (m/e^2)^theta e^{N/2-2} for every A(lambda)
/// with q(lambda) = m, valid whenever |mu(n)| <= n^theta tau(n).
double coefficient_majorant(const MaassForm& f, int N, long long m);

/// A(lambda) for every vector of a materialized shell table.
struct CoefficientTable {
    long long max_norm = 0;
    std::vector<std::vector<double>> by_shell;  ///< by_shell[m-1][i] belongs to tab.shell(m)[i]
};

CoefficientTable coefficient_table(const ShellTable& tab, const MaassForm& f);

struct EvalOptions {
    /// Target for the tail bound, relative to |c(1)| y^{N/2} e^{-pi r/2}.
    double tol = 1e-10;
    double y_min = 0.5;
    /// Maximal number of lattice vectors summed at general x.
    long long vector_budget = 200'000'000;
    /// Fixed truncation radius when positive.
    long long force_M = 0;
};

/// F_f(n(x) a_y) truncated to q(lambda) <= truncation_M.
///
/// Values are kept as scaled * exp(log_scale) with log_scale = (N/2) log y - pi r/2,
/// so `value` may underflow while `scaled_value` stays meaningful.
struct LiftEvaluation {
    std::vector<double> x;
    double y = 0.0;
    std::complex<double> value;
    std::complex<double> scaled_value;
    double log_scale = 0.0;
    long long truncation_M = 0;
    double tail_bound = 0.0;         ///< absolute bound on the omitted terms
    double scaled_tail_bound = 0.0;  ///< tail_bound * exp(-log_scale)
    long long vectors_summed = 0;
    /// False when the shell-count majorant is heuristic (ranks other than 8 and 16).
    bool certified = true;
};

/// Sums the Fourier expansion with the truncation chosen so the tail
/// majorant (coefficient majorant x shell-count majorant x |k|, plus an
/// analytic remainder) is below tol. Integral x uses shell counts only;
/// general x enumerates lattice vectors. Throws ConvergenceError when the
/// vector budget is exhausted and DomainError for y < y_min.
LiftEvaluation evaluate(const Lattice& lat, const MaassForm& f, std::span<const double> x, double y,
                        const EvalOptions& opts = {});

/// Absolute tail bound for truncation at M (the quantity reported by evaluate).
double tail_bound(const Lattice& lat, const MaassForm& f, double y, long long M, double tol = 1e-10);

struct PeriodicityReport {
    std::complex<double> base;
    std::vector<std::complex<double>> shifted;  ///< value at x + e_j
    double max_difference = 0.0;
    double tolerance = 0.0;  ///< 10 tol |c(1)| y^{N/2} e^{-pi r/2}
    bool passed = true;
};

/// Compares F at x and at x + e_j for every basis vector e_j.
PeriodicityReport periodicity_check(const Lattice& lat, const MaassForm& f, std::span<const double> x, double y,
                                    const EvalOptions& opts = {});

}  // namespace thetalift::lift
