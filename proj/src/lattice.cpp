#include "thetalift/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace thetalift {

namespace {

// Cartan matrix of E8 (Bourbaki labelling: 1-3-4-5-6-7-8 with 2 on 4).
std::vector<long long> e8_gram() {
    const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    std::vector<long long> g(64, 0);
    for (int i = 0; i < 8; ++i) g[i * 8 + i] = 2;
    for (auto [a, b] : edges) {
        g[a * 8 + b] = -1;
        g[b * 8 + a] = -1;
    }
    return g;
}

// D16+ in a Hermite-normal-form basis of D16 + Z(1/2, ..., 1/2).
std::vector<long long> d16plus_gram() {
    const int n = 16;
    std::vector<long long> g(n * n, 1);
    for (int i = 1; i < n - 1; ++i) {
        g[i * n + i] = 2;
        g[i * n] = g[i] = 2;
    }
    g[0] = 4;
    g[(n - 1) * n + (n - 1)] = 4;
    g[(n - 1) * n] = g[n - 1] = 1;
    return g;
}

void validate(int rank, const std::vector<long long>& g) {
    if (rank <= 0) throw ValidationError("lattice rank must be positive");
    if (rank % 8 != 0) throw ValidationError("even unimodular lattices need rank divisible by 8, got " + std::to_string(rank));
    if (g.size() != static_cast<std::size_t>(rank) * rank) throw ValidationError("Gram matrix has wrong size");
    for (int i = 0; i < rank; ++i) {
        if (g[i * rank + i] % 2 != 0) throw ValidationError("Gram matrix has odd diagonal entry at " + std::to_string(i));
        for (int j = 0; j < i; ++j)
            if (g[i * rank + j] != g[j * rank + i]) throw ValidationError("Gram matrix is not symmetric");
    }
    // Bareiss elimination: the k-th pivot is the k-th leading principal minor.
    std::vector<__int128> a(g.begin(), g.end());
    __int128 prev = 1;
    for (int k = 0; k < rank; ++k) {
        __int128 pivot = a[k * rank + k];
        if (pivot <= 0) throw ValidationError("Gram matrix is not positive definite (minor " + std::to_string(k + 1) + ")");
        for (int i = k + 1; i < rank; ++i)
            for (int j = k + 1; j < rank; ++j)
                a[i * rank + j] = (a[i * rank + j] * pivot - a[i * rank + k] * a[k * rank + j]) / prev;
        prev = pivot;
    }
    if (prev != 1) throw ValidationError("Gram matrix is not unimodular (determinant != 1)");
}

}  // namespace

Lattice::Lattice(int rank, std::vector<long long> gram, std::string name)
    : rank_(rank), gram_(std::move(gram)), name_(std::move(name)) {
    validate(rank_, gram_);
    // Cholesky of S/2 = L L^T; q(v) = |L^T v|^2.
    const int n = rank_;
    std::vector<double> l(n * n, 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.5 * static_cast<double>(this->gram(j, j));
        for (int k = 0; k < j; ++k) s -= l[j * n + k] * l[j * n + k];
        l[j * n + j] = std::sqrt(s);
        for (int i = j + 1; i < n; ++i) {
            double t = 0.5 * static_cast<double>(this->gram(i, j));
            for (int k = 0; k < j; ++k) t -= l[i * n + k] * l[j * n + k];
            l[i * n + j] = t / l[j * n + j];
        }
    }
    fp_diag_.assign(n, 0.0);
    fp_mu_.assign(n * n, 0.0);
    for (int i = 0; i < n; ++i) {
        double lii = l[i * n + i];
        fp_diag_[i] = lii * lii;
        for (int j = i + 1; j < n; ++j) fp_mu_[i * n + j] = l[j * n + i] / lii;
    }
}

Lattice Lattice::direct_sum(const Lattice& a, const Lattice& b) {
    const int n = a.rank() + b.rank();
    std::vector<long long> g(n * n, 0);
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) g[i * n + j] = a.gram(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) g[(a.rank() + i) * n + a.rank() + j] = b.gram(i, j);
    return Lattice(n, std::move(g), a.name() + "x" + b.name());
}

Lattice Lattice::builtin(std::string_view name) {
    if (name == "E8") return Lattice(8, e8_gram(), "E8");
    if (name == "E8xE8") {
        Lattice e8 = builtin("E8");
        return direct_sum(e8, e8);
    }
    if (name == "D16plus") return Lattice(16, d16plus_gram(), "D16plus");
    throw ValidationError("unknown built-in lattice '" + std::string(name) + "' (expected E8, E8xE8 or D16plus)");
}

Lattice Lattice::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("lattice JSON: ") + e.what());
    }
    if (!j.contains("rank") || !j.contains("gram")) throw ValidationError("lattice JSON needs 'rank' and 'gram'");
    int rank = j.at("rank").get<int>();
    std::vector<long long> g;
    const auto& rows = j.at("gram");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(rank))
        throw ValidationError("lattice JSON: 'gram' must have 'rank' rows");
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
            throw ValidationError("lattice JSON: every Gram row needs 'rank' entries");
        for (const auto& v : row) g.push_back(v.get<long long>());
    }
    return Lattice(rank, std::move(g), j.value("name", std::string("custom")));
}

Lattice Lattice::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open lattice file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

long long Lattice::norm(std::span<const int> v) const {
    long long twice = 0;
    for (int i = 0; i < rank_; ++i) {
        if (v[i] == 0) continue;
        long long row = gram(i, i) / 2 * v[i];
        for (int j = i + 1; j < rank_; ++j) row += gram(i, j) * v[j];
        twice += row * v[i];
    }
    return twice;
}

std::vector<double> Lattice::apply_gram(std::span<const double> x) const {
    std::vector<double> out(rank_, 0.0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i] += static_cast<double>(gram(i, j)) * x[j];
    return out;
}

void Shell::sort_lexicographic() {
    const std::size_t n = size();
    auto key = [&](std::size_t i) { return coords_.begin() + i * rank_; };
    std::vector<std::size_t> idx(n);
    // When every coordinate fits in 64 / rank bits after shifting by the minimum,
    // the packed big-endian word orders like the coordinate tuple.
    int lo = 0, hi = 0;
    if (!coords_.empty()) {
        auto [a, b] = std::minmax_element(coords_.begin(), coords_.end());
        lo = *a;
        hi = *b;
    }
    const int bits = 64 / rank_;
    const unsigned long long span = static_cast<unsigned long long>(static_cast<long long>(hi) - lo);
    if (bits >= 1 && bits < 64 && span < (1ULL << bits)) {
        std::vector<std::pair<unsigned long long, std::size_t>> packed(n);
        for (std::size_t i = 0; i < n; ++i) {
            unsigned long long w = 0;
            for (auto it = key(i); it != key(i) + rank_; ++it)
                w = (w << bits) | static_cast<unsigned long long>(static_cast<long long>(*it) - lo);
            packed[i] = {w, i};
        }
        std::sort(packed.begin(), packed.end());
        for (std::size_t k = 0; k < n; ++k) idx[k] = packed[k].second;
    } else {
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(key(a), key(a) + rank_, key(b), key(b) + rank_);
        });
    }
    std::vector<int> coords(coords_.size());
    std::vector<int> prim(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::copy(key(idx[k]), key(idx[k]) + rank_, coords.begin() + k * rank_);
        prim[k] = primitivity_[idx[k]];
    }
    coords_ = std::move(coords);
    primitivity_ = std::move(prim);
}

const Shell& ShellTable::shell(long long m) const {
    if (m < 1 || m > max_norm_)
        throw DomainError("shell " + std::to_string(m) + " outside table range 1.." + std::to_string(max_norm_));
    return shells_[m - 1];
}

std::size_t ShellTable::total_vectors() const {
    std::size_t total = 0;
    for (const auto& s : shells_) total += s.size();
    return total;
}

int coordinate_gcd(std::span<const int> v) {
    int g = 0;
    for (int c : v) g = std::gcd(g, c);
    return g;
}

ShellTable enumerate_shells(const Lattice& lat, long long max_norm) {
    if (max_norm < 1) throw DomainError("enumerate_shells: max_norm must be >= 1");
    std::vector<Shell> shells;
    shells.reserve(max_norm);
    for (long long m = 1; m <= max_norm; ++m) shells.emplace_back(m, lat.rank());
    for_each_vector(lat, max_norm, [&](std::span<const int> v, long long q) {
        shells[q - 1].push_back(v, coordinate_gcd(v));
    });
    for (auto& s : shells) s.sort_lexicographic();
    return ShellTable(lat, max_norm, std::move(shells));
}

long long ShellCounts::with_divisor(long long m, long long d) const {
    if (m < 1 || m > max_norm) throw DomainError("shell " + std::to_string(m) + " outside counted range");
    if (d < 1 || m % (d * d) != 0) return 0;
    return primitive[m / (d * d)];
}

namespace {

// total(m) = sum_{d^2 | m} primitive(m / d^2); invert from small m upward.
void fill_primitive(ShellCounts& out) {
    out.primitive.assign(out.max_norm + 1, 0);
    for (long long m = 1; m <= out.max_norm; ++m) {
        long long p = out.total[m];
        for (long long d = 2; d * d <= m; ++d)
            if (m % (d * d) == 0) p -= out.primitive[m / (d * d)];
        out.primitive[m] = p;
    }
}

}  // namespace

ShellCounts count_shells(const Lattice& lat, long long max_norm) {
    if (max_norm < 1) throw DomainError("count_shells: max_norm must be >= 1");
    ShellCounts out;
    out.max_norm = max_norm;
    out.total.assign(max_norm + 1, 0);
    for_each_vector(lat, max_norm, [&](std::span<const int>, long long q) { out.total[q] += 2; }, true);
    fill_primitive(out);
    return out;
}

ShellCounts eisenstein_shell_counts(int N, long long max_norm) {
    if (N != 8 && N != 16) throw DomainError("eisenstein_shell_counts: only ranks 8 and 16 have Eisenstein theta series");
    if (max_norm < 1) throw DomainError("eisenstein_shell_counts: max_norm must be >= 1");
    const int k = N / 2 - 1;
    const __int128 factor = N == 8 ? 240 : 480;
    const __int128 limit = std::numeric_limits<long long>::max();
    ShellCounts out;
    out.max_norm = max_norm;
    out.total.assign(max_norm + 1, 0);
    for (long long m = 1; m <= max_norm; ++m) {
        __int128 sigma = 0;
        for (long long d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            for (long long e : {d, m / d}) {
                __int128 pw = 1;
                for (int i = 0; i < k; ++i) pw *= e;
                sigma += pw;
                if (e == m / e) break;
            }
        }
        __int128 total = factor * sigma;
        if (total > limit) throw DomainError("eisenstein_shell_counts: count overflows at m = " + std::to_string(m));
        out.total[m] = static_cast<long long>(total);
    }
    fill_primitive(out);
    return out;
}

ShellCounts shell_counts(const Lattice& lat, long long max_norm) {
    if (lat.rank() == 8 || lat.rank() == 16) return eisenstein_shell_counts(lat.rank(), max_norm);
    return count_shells(lat, max_norm);
}

long long shell_count(const ShellTable& tab, long long m) { return static_cast<long long>(tab.shell(m).size()); }

double shell_divisor_sum(const ShellTable& tab, long long m, double exponent) {
    const Shell& s = tab.shell(m);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) sum += std::pow(static_cast<double>(s[i].primitivity), exponent);
    return sum;
}

double shell_divisor_sum(const ShellCounts& counts, long long m, double exponent) {
    if (m < 1 || m > counts.max_norm) throw DomainError("shell " + std::to_string(m) + " outside counted range");
    double sum = 0.0;
    for (long long d = 1; d * d <= m; ++d)
        if (m % (d * d) == 0) sum += static_cast<double>(counts.primitive[m / (d * d)]) * std::pow(static_cast<double>(d), exponent);
    return sum;
}

}  // namespace thetalift
