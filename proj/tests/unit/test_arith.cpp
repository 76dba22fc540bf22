#include <cmath>

#include "doctest.h"
#include "thetalift/arith.hpp"

using namespace thetalift::arith;

TEST_SUITE("arith") {

TEST_CASE("factorization, primality and multiplicative functions") {
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair(2LL, 3));
    CHECK(f[1] == std::make_pair(3LL, 2));
    CHECK(f[2] == std::make_pair(5LL, 1));
    CHECK(factorize(1).empty());
    CHECK(is_prime(9973));
    CHECK_FALSE(is_prime(9999));
    CHECK_FALSE(is_prime(1));
    CHECK(primes_up_to(100).size() == 25);
    CHECK(primes_up_to(10000).size() == 1229);
    CHECK(tau(360) == 24);
    CHECK(sigma(6, 1) == 12);
    CHECK(sigma(4, 3) == 73);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(1) == 1);
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(1) == -0.5);
    CHECK(bernoulli(4) == doctest::Approx(-1.0 / 30));
    CHECK(bernoulli(8) == doctest::Approx(-1.0 / 30));
    CHECK(bernoulli(12) == doctest::Approx(-691.0 / 2730));
    CHECK(bernoulli(3) == 0.0);
}

}  // TEST_SUITE
