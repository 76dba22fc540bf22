#include "thetalift/arith.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>

#include "thetalift/error.hpp"

namespace thetalift::arith {

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    if (n < 2) return out;
    std::vector<char> composite(n + 1, 0);
    for (long long p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (long long q = p * p; q <= n; q += p) composite[q] = 1;
    }
    return out;
}

long long tau(long long n) {
    long long t = 1;
    for (auto [p, e] : factorize(n)) t *= e + 1;
    return t;
}

double sigma(long long n, double k) {
    double s = 1.0;
    for (auto [p, e] : factorize(n)) {
        double term = 1.0, pk = std::pow(static_cast<double>(p), k), acc = 1.0;
        for (int i = 0; i < e; ++i) {
            term *= pk;
            acc += term;
        }
        s *= acc;
    }
    return s;
}

int moebius(long long n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

double bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli: negative index");
    if (n == 0) return 1.0;
    if (n == 1) return -0.5;
    if (n % 2 == 1) return 0.0;
    return boost::math::bernoulli_b2n<double>(n / 2);
}

}  // namespace thetalift::arith
