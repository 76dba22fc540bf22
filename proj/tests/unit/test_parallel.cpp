#include <atomic>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "thetalift/parallel.hpp"

using namespace thetalift;

TEST_SUITE("parallel") {

TEST_CASE("every index runs exactly once") {
    for (int threads : {1, 2, 7, 0}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    int calls = 0;
    parallel_for(0, 4, [&](std::size_t) { ++calls; });
    CHECK(calls == 0);
}

TEST_CASE("exceptions propagate") {
    CHECK_THROWS_AS(parallel_for(100, 4, [](std::size_t i) {
                        if (i == 37) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
}

TEST_CASE("resolve_threads") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
    CHECK(resolve_threads(-1) >= 1);
}

}  // TEST_SUITE
