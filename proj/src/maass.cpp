#include "thetalift/maass.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "thetalift/arith.hpp"

namespace thetalift {

SpectralParams::SpectralParams(double r_, int N_, Rational theta_) : r(r_), N(N_), theta(theta_) {
    if (!(r > 0.0) || !std::isfinite(r)) throw ValidationError("spectral parameter r must be positive");
    if (N <= 0 || N % 8 != 0) throw ValidationError("rank N must be a positive multiple of 8, got " + std::to_string(N));
    if (theta < Rational(0) || theta >= Rational(1, 4)) throw ValidationError("theta must lie in [0, 1/4)");
}

MaassForm::MaassForm(double r, int parity, double c1, std::optional<double> norm_sq,
                     std::map<long long, double> hecke, const FormOptions& opts)
    : r_(r), parity_(parity), c1_(c1), norm_sq_(norm_sq), hecke_(std::move(hecke)), theta_(opts.theta) {
    if (!std::isfinite(r_) || r_ < opts.r_min)
        throw ValidationError("spectral parameter r = " + std::to_string(r_) + " is below r_min = " +
                              std::to_string(opts.r_min));
    if (parity_ != 1 && parity_ != -1) throw ValidationError("parity must be +1 or -1");
    if (!(c1_ != 0.0) || !std::isfinite(c1_)) throw ValidationError("c1 must be finite and nonzero");
    if (norm_sq_ && !(*norm_sq_ > 0.0 && std::isfinite(*norm_sq_))) throw ValidationError("norm_sq must be positive");
    const double theta = to_double(theta_);
    for (const auto& [p, mu] : hecke_) {
        if (!arith::is_prime(p)) throw ValidationError("Hecke table key " + std::to_string(p) + " is not a prime");
        if (!std::isfinite(mu)) throw ValidationError("Hecke eigenvalue at p = " + std::to_string(p) + " is not finite");
        double limit = 2.0 * std::pow(static_cast<double>(p), theta);
        if (std::abs(mu) > limit)
            throw ValidationError("Hecke eigenvalue mu(" + std::to_string(p) + ") = " + std::to_string(mu) +
                                  " violates |mu(p)| <= 2 p^theta = " + std::to_string(limit));
    }
}

MaassForm MaassForm::from_json_text(const std::string& text, const FormOptions& opts) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("form JSON: ") + e.what());
    }
    try {
        std::optional<double> norm_sq;
        if (j.contains("norm_sq") && !j.at("norm_sq").is_null()) norm_sq = j.at("norm_sq").get<double>();
        std::map<long long, double> hecke;
        if (j.contains("hecke")) {
            for (const auto& [key, value] : j.at("hecke").items()) {
                std::size_t used = 0;
                long long p = std::stoll(key, &used);
                if (used != key.size()) throw ValidationError("Hecke key '" + key + "' is not an integer");
                hecke[p] = value.get<double>();
            }
        }
        return MaassForm(j.at("r").get<double>(), j.at("parity").get<int>(), j.value("c1", 1.0), norm_sq,
                         std::move(hecke), opts);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("form JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ValidationError("form JSON: Hecke keys must be integers");
    }
}

MaassForm MaassForm::from_json_file(const std::string& path, const FormOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open form file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), opts);
}

MaassForm MaassForm::scaled(double alpha) const {
    MaassForm out = *this;
    if (!(alpha != 0.0) || !std::isfinite(alpha)) throw ValidationError("scale factor must be finite and nonzero");
    out.c1_ *= alpha;
    if (out.norm_sq_) *out.norm_sq_ *= alpha * alpha;
    return out;
}

double MaassForm::prime_eigenvalue(long long p) const {
    auto it = hecke_.find(p);
    if (it == hecke_.end()) throw InsufficientDataError(p);
    return it->second;
}

double MaassForm::hecke_eigenvalue(long long m) const {
    if (m < 1) throw DomainError("hecke_eigenvalue: m must be positive");
    double result = 1.0;
    for (auto [p, e] : arith::factorize(m)) {
        double mp = prime_eigenvalue(p);
        double prev = 1.0, cur = mp;  // mu(p^0), mu(p^1)
        for (int k = 1; k < e; ++k) {
            double next = mp * cur - prev;
            prev = cur;
            cur = next;
        }
        result *= cur;
    }
    return result;
}

double MaassForm::coefficient(long long n) const {
    if (n == 0) throw DomainError("coefficient: n must be nonzero");
    double c = c1_ * hecke_eigenvalue(n < 0 ? -n : n);
    return n < 0 ? parity_ * c : c;
}

RamanujanReport ramanujan_check(const MaassForm& f, long long M) {
    if (M < 1) throw DomainError("ramanujan_check: M must be >= 1");
    RamanujanReport rep;
    const double theta = to_double(f.theta());
    for (long long m = 1; m <= M; ++m) {
        double ratio = std::abs(f.hecke_eigenvalue(m)) /
                       (std::pow(static_cast<double>(m), theta) * static_cast<double>(arith::tau(m)));
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.argmax = m;
        }
        ++rep.checked;
    }
    rep.passed = rep.max_ratio <= 1.0 + 1e-12;
    return rep;
}

C1Window c1_envelope(const MaassForm& f, double eps0) {
    if (!f.norm_sq()) throw ValidationError("c1_envelope needs norm_sq in the form data");
    double ch = std::cosh(std::numbers::pi * f.r() / 2.0);
    double rp = std::pow(f.r(), eps0);
    return {ch / rp, ch * rp, f.c1() * f.c1() / *f.norm_sq()};
}

}  // namespace thetalift
