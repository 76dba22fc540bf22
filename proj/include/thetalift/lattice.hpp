#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thetalift/error.hpp"

namespace thetalift {

/// Even unimodular lattice Z^N with quadratic form q(v) = v^T S v / 2.
///
/// Construction validates the Gram matrix: symmetric, even diagonal,
/// positive definite (all leading principal minors > 0, checked exactly
/// by fraction-free elimination), determinant 1 and rank divisible by 8.
class Lattice {
public:
    Lattice(int rank, std::vector<long long> gram, std::string name = "custom");

    static Lattice builtin(std::string_view name);
    static Lattice from_json_file(const std::string& path);
    static Lattice from_json_text(const std::string& text);
    static Lattice direct_sum(const Lattice& a, const Lattice& b);

    int rank() const noexcept { return rank_; }
    const std::string& name() const noexcept { return name_; }
    long long gram(int i, int j) const noexcept { return gram_[static_cast<std::size_t>(i) * rank_ + j]; }
    std::span<const long long> gram_data() const noexcept { return gram_; }

    /// Exact q(v) = v^T S v / 2.
    long long norm(std::span<const int> v) const;
    /// S x, the frequency vector used in exp(2 pi i lambda^T S x).
    std::vector<double> apply_gram(std::span<const double> x) const;

    /// Upper-triangular Fincke-Pohst form: q(v) = sum_i d_i (v_i + sum_{j>i} mu_ij v_j)^2.
    const std::vector<double>& fp_diag() const noexcept { return fp_diag_; }
    const std::vector<double>& fp_mu() const noexcept { return fp_mu_; }

private:
    int rank_;
    std::vector<long long> gram_;
    std::string name_;
    std::vector<double> fp_diag_;
    std::vector<double> fp_mu_;
};

/// Lattice vector with its norm q(v) and primitivity divisor d = gcd(coords).
struct ShellVector {
    std::span<const int> coords;
    long long norm_sq = 0;
    int primitivity = 1;
};

/// All vectors of one norm, sorted lexicographically by coordinates.
class Shell {
public:
    Shell(long long norm, int rank) : norm_(norm), rank_(rank) {}

    long long norm() const noexcept { return norm_; }
    std::size_t size() const noexcept { return primitivity_.size(); }
    ShellVector operator[](std::size_t i) const {
        return {std::span<const int>(coords_.data() + i * rank_, rank_), norm_, primitivity_[i]};
    }
    void push_back(std::span<const int> v, int d) {
        coords_.insert(coords_.end(), v.begin(), v.end());
        primitivity_.push_back(d);
    }
    void sort_lexicographic();

private:
    long long norm_;
    int rank_;
    std::vector<int> coords_;
    std::vector<int> primitivity_;
};

/// Materialized shells 1..max_norm. Immutable after construction.
class ShellTable {
public:
    ShellTable(Lattice lattice, long long max_norm, std::vector<Shell> shells)
        : lattice_(std::move(lattice)), max_norm_(max_norm), shells_(std::move(shells)) {}

    const Lattice& lattice() const noexcept { return lattice_; }
    long long max_norm() const noexcept { return max_norm_; }
    const Shell& shell(long long m) const;
    std::size_t total_vectors() const;

private:
    Lattice lattice_;
    long long max_norm_;
    std::vector<Shell> shells_;
};

/// Shell sizes r(m) for 0 <= m <= max_norm, without storing vectors.
struct ShellCounts {
    long long max_norm = 0;
    std::vector<long long> total;      ///< total[m] = #{v : q(v) = m}
    std::vector<long long> primitive;  ///< primitive[m] = #{v : q(v) = m, gcd(v) = 1}

    /// #{v : q(v) = m, d_v = d}; zero unless d^2 | m.
    long long with_divisor(long long m, long long d) const;
};

/// Bounded Fincke-Pohst enumeration of all nonzero v with q(v) <= max_norm.
///
/// Calls visit(std::span<const int> v, long long q). With half = true only
/// one of each pair +-v is visited (the one whose last nonzero coordinate
/// is positive). Floating bounds are widened by one on each side and every
/// candidate is filtered with the exact integer norm.
template <class Visitor>
void for_each_vector(const Lattice& lat, long long max_norm, Visitor&& visit, bool half = false);

ShellTable enumerate_shells(const Lattice& lat, long long max_norm);
/// Shell sizes by enumeration (one vector of each pair +-v is visited).
ShellCounts count_shells(const Lattice& lat, long long max_norm);
/// Shell sizes from the theta series for ranks where it is an Eisenstein
/// series: r(m) = 240 sigma_3(m) for N = 8 and 480 sigma_7(m) for N = 16.
/// Throws DomainError for other ranks or when a count overflows.
ShellCounts eisenstein_shell_counts(int N, long long max_norm);
/// eisenstein_shell_counts when the rank allows it, count_shells otherwise.
ShellCounts shell_counts(const Lattice& lat, long long max_norm);

long long shell_count(const ShellTable& tab, long long m);
/// Sum over the shell of d_v^exponent.
double shell_divisor_sum(const ShellTable& tab, long long m, double exponent);
/// Same sum from class counts: sum over d^2 | m of primitive(m / d^2) * d^exponent.
double shell_divisor_sum(const ShellCounts& counts, long long m, double exponent);

int coordinate_gcd(std::span<const int> v);

// --- implementation of the enumerator -------------------------------------

template <class Visitor>
void for_each_vector(const Lattice& lat, long long max_norm, Visitor&& visit, bool half) {
    const int n = lat.rank();
    const auto& diag = lat.fp_diag();
    const auto& mu = lat.fp_mu();
    const double bound = static_cast<double>(max_norm) * (1.0 + 1e-12) + 1e-9;

    std::vector<int> x(n, 0);
    std::vector<double> center(n, 0.0), partial(n + 1, 0.0);
    std::vector<long long> hi(n, 0);
    // upper_zero[i]: every coordinate at levels >= i is zero.
    std::vector<char> upper_zero(n + 1, 1);

    auto set_range = [&](int i) {
        double c = 0.0;
        for (int j = i + 1; j < n; ++j) c += mu[static_cast<std::size_t>(i) * n + j] * x[j];
        center[i] = -c;
        double rem = std::max(0.0, bound - partial[i + 1]);
        double w = std::sqrt(rem / diag[i]);
        long long lo = static_cast<long long>(std::ceil(center[i] - w)) - 1;
        hi[i] = static_cast<long long>(std::floor(center[i] + w)) + 1;
        if (half && upper_zero[i + 1]) lo = std::max(lo, 0LL);
        x[i] = static_cast<int>(lo);
    };

    int i = n - 1;
    partial[n] = 0.0;
    set_range(i);
    while (true) {
        if (x[i] > hi[i]) {
            if (++i >= n) break;
            ++x[i];
            continue;
        }
        double t = x[i] - center[i];
        double p = partial[i + 1] + diag[i] * t * t;
        if (p > bound) {
            // Past the right end of the interval only if x > center.
            if (x[i] > center[i]) {
                x[i] = static_cast<int>(hi[i]) + 1;
            } else {
                ++x[i];
            }
            continue;
        }
        partial[i] = p;
        if (i == 0) {
            bool zero_vec = upper_zero[1] && x[0] == 0;
            if (!zero_vec && !(half && upper_zero[1] && x[0] < 0)) {
                long long q = lat.norm(x);
                if (q >= 1 && q <= max_norm) visit(std::span<const int>(x), q);
            }
            ++x[0];
            continue;
        }
        upper_zero[i] = upper_zero[i + 1] && x[i] == 0;
        --i;
        set_range(i);
    }
}

}  // namespace thetalift
