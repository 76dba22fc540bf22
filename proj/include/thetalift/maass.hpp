#pragma once

#include <map>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "thetalift/error.hpp"

namespace thetalift {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

/// Ingestion limits for Maass form data.
struct FormOptions {
    Rational theta{7, 64};  ///< exponent in |mu(p)| <= 2 p^theta
    double r_min = 1.0;
};

/// Spectral data used by the bound formulas: (r, N, theta).
struct SpectralParams {
    SpectralParams(double r, int N, Rational theta = Rational(7, 64));

    double r;
    int N;
    Rational theta;
};

/// Level-1 Hecke-Maass cusp form given by its spectral parameter r
/// (Laplace eigenvalue -(r^2+1)/4), parity eps with c(-n) = eps c(n),
/// first coefficient c(1) and Hecke eigenvalues mu(p) at primes.
///
/// Immutable after construction; all queries are pure.
class MaassForm {
public:
    MaassForm(double r, int parity, double c1, std::optional<double> norm_sq,
              std::map<long long, double> hecke, const FormOptions& opts = {});

    /// Parses {"r", "parity", "c1", "norm_sq", "hecke": {"2": ..., ...}}.
    static MaassForm from_json_text(const std::string& text, const FormOptions& opts = {});
    static MaassForm from_json_file(const std::string& path, const FormOptions& opts = {});

    double r() const noexcept { return r_; }
    int parity() const noexcept { return parity_; }
    double c1() const noexcept { return c1_; }
    const std::optional<double>& norm_sq() const noexcept { return norm_sq_; }
    const std::map<long long, double>& hecke() const noexcept { return hecke_; }
    /// Largest prime with a stored eigenvalue (0 if none).
    long long max_prime() const noexcept { return hecke_.empty() ? 0 : hecke_.rbegin()->first; }
    const Rational& theta() const noexcept { return theta_; }

    /// Same form with c(1) (and norm_sq) rescaled by alpha (alpha^2).
    MaassForm scaled(double alpha) const;

    /// mu(m) via multiplicativity and mu(p^{k+1}) = mu(p) mu(p^k) - mu(p^{k-1}).
    double hecke_eigenvalue(long long m) const;
    /// mu(p) for a stored prime; throws InsufficientDataError otherwise.
    double prime_eigenvalue(long long p) const;
    /// c(n) = c(1) mu(|n|), times eps for n < 0.
    double coefficient(long long n) const;

private:
    double r_;
    int parity_;
    double c1_;
    std::optional<double> norm_sq_;
    std::map<long long, double> hecke_;
    Rational theta_;
};

struct RamanujanReport {
    long long checked = 0;
    double max_ratio = 0.0;  ///< max |mu(m)| / (m^theta tau(m))
    long long argmax = 1;
    bool passed = true;
};

/// Checks |mu(m)| <= m^theta tau(m) for 1 <= m <= M.
RamanujanReport ramanujan_check(const MaassForm& f, long long M);

struct C1Window {
    double lower = 0.0;     ///< cosh(pi r/2) r^{-eps0}
    double upper = 0.0;     ///< cosh(pi r/2) r^{eps0}
    double measured = 0.0;  ///< |c(1)|^2 / norm_sq
    /// measured lies in [lower / slack, upper * slack].
    bool within(double slack) const { return measured >= lower / slack && measured <= upper * slack; }
};

/// Advisory window for |c(1)|^2 / ||f||^2; throws ValidationError without norm_sq.
C1Window c1_envelope(const MaassForm& f, double eps0 = 0.1);

}  // namespace thetalift
