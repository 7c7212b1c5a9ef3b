#include <doctest.h>

#include <functional>
#include <numeric>

#include "mufold/arith.hpp"

using namespace mufold;

namespace {

// longest nested divisor chain by depth-first search, the independent oracle
long longest_chain_dfs(long m) {
    if (m == 1) return 1;
    long best = 1;
    std::function<void(long, long)> walk = [&](long d, long len) {
        best = std::max(best, len);
        for (long q = 2; q * q <= d; ++q) {
            if (d % q == 0) {
                walk(d / q, len + 1);
                if (q != d / q) walk(q, len + 1);
            }
        }
        if (d > 1) walk(1, len + 1);
    };
    walk(m, 0);
    return best;
}

} // namespace

TEST_CASE("prime factorization") {
    CHECK(factorize(36).prime_powers ==
          std::vector<std::pair<long, int>>{{2, 2}, {3, 2}});
    CHECK(factorize(30).prime_powers ==
          std::vector<std::pair<long, int>>{{2, 1}, {3, 1}, {5, 1}});
    CHECK(factorize(1).prime_powers.empty());
    CHECK(factorize(36).flat_primes() == std::vector<long>{2, 2, 3, 3});
}

TEST_CASE("sigma") {
    CHECK(sigma(30) == 3);
    CHECK(sigma(36) == longest_chain_dfs(36)); // brute force says 4
    CHECK(sigma(36) == 4);
    CHECK(sigma(1) == 1);
}

TEST_CASE("sigma equals the brute-force longest chain up to 10^4") {
    for (long m = 1; m <= 10000; ++m) CHECK(sigma(m) == longest_chain_dfs(m));
}

TEST_CASE("sigma is additive on products") {
    for (long m = 2; m <= 40; ++m)
        for (long n = 2; n <= 40; n += 3) CHECK(sigma(m * n) == sigma(m) + sigma(n));
}

TEST_CASE("minimal divisor chain") {
    CHECK(minimal_divisor_chain(36, 5).divisors == std::vector<long>{36, 12, 4, 2, 1});
    CHECK(minimal_divisor_chain(36, 3).divisors == std::vector<long>{36, 2, 1});
    CHECK(minimal_divisor_chain(7, 2).divisors == std::vector<long>{7, 1});

    CHECK_THROWS_AS((void)minimal_divisor_chain(36, 6), Error);
    CHECK_THROWS_AS((void)minimal_divisor_chain(7, 3), Error);
    CHECK_THROWS_AS((void)minimal_divisor_chain(36, 1), Error);
}

TEST_CASE("minimal chains are nested with prime quotients") {
    for (long m = 2; m <= 200; ++m) {
        for (int k = 2; k <= sigma(m) + 1; ++k) {
            DivisorChain c = minimal_divisor_chain(m, k);
            REQUIRE(c.length() == k);
            CHECK(c.at(0) == m);
            CHECK(c.at(k - 1) == 1);
            for (int i = 0; i + 1 < k; ++i) {
                CHECK(c.at(i) > c.at(i + 1));
                CHECK(c.at(i) % c.at(i + 1) == 0);
                if (i >= 1) {
                    long q = c.at(i) / c.at(i + 1);
                    CHECK(factorize(q).flat_primes().size() == 1); // prime quotient
                }
            }
        }
    }
}
