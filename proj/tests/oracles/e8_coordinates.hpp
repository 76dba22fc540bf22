#pragma once

// Shell counts of E8 in its coordinate model, independent of any Gram basis:
// E8 = { v in Z^8 u (Z + 1/2)^8 : sum v_i even }, q(v) = |v|^2 / 2.
// With w = 2v the conditions read: all w_i even or all odd, sum w_i = 0 mod 4,
// and q = |w|^2 / 8. Every w in the box |w_i| <= sqrt(8 M) is scanned, with
// the partial sum of squares used only to skip hopeless branches.

#include <cmath>
#include <vector>

namespace oracle {

namespace detail {

inline void e8_scan(int depth, int parity, long long sumsq, long long sum, long long limit, int bound,
                    std::vector<long long>& counts) {
    if (depth == 8) {
        if (sumsq % 8 == 0 && ((sum % 4) + 4) % 4 == 0) {
            long long q = sumsq / 8;
            if (q >= 1 && q < static_cast<long long>(counts.size())) ++counts[q];
        }
        return;
    }
    for (int w = -bound; w <= bound; ++w) {
        if (((w % 2) + 2) % 2 != parity) continue;
        long long s = sumsq + static_cast<long long>(w) * w;
        if (s > limit) continue;
        e8_scan(depth + 1, parity, s, sum + w, limit, bound, counts);
    }
}

}  // namespace detail

/// counts[m] = number of E8 vectors of norm m, 1 <= m <= max_norm.
inline std::vector<long long> e8_coordinate_counts(long long max_norm) {
    std::vector<long long> counts(max_norm + 1, 0);
    const long long limit = 8 * max_norm;
    const int bound = static_cast<int>(std::floor(std::sqrt(static_cast<double>(limit))));
    for (int parity : {0, 1}) detail::e8_scan(0, parity, 0, 0, limit, bound, counts);
    return counts;
}

}  // namespace oracle
