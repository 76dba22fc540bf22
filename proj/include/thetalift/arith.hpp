#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace thetalift::arith {

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
std::vector<std::pair<long long, int>> factorize(long long n);

bool is_prime(long long n);
/// Primes p <= n.
std::vector<long long> primes_up_to(long long n);

/// Number of divisors.
long long tau(long long n);
/// Sum of d^k over divisors d of n.
double sigma(long long n, double k);
/// Moebius function.
int moebius(long long n);

/// Bernoulli number B_n as a double (B_1 = -1/2), exact for the ranges used here.
double bernoulli(int n);

}  // namespace thetalift::arith
