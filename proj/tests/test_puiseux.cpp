#include <doctest.h>

#include <numeric>
#include <random>

#include "mufold/arith.hpp"
#include "mufold/cli.hpp"
#include "mufold/puiseux.hpp"

using namespace mufold;

namespace {

PuiseuxBranch B(const std::string& spec) { return parse_branch_spec(spec); }

PuiseuxBranch random_primitive_branch(std::mt19937& rng, long max_m, long max_exp) {
    std::uniform_int_distribution<long> mdist(2, max_m);
    std::uniform_int_distribution<int> ndist(1, 3);
    std::uniform_int_distribution<int> cdist(1, 5);
    while (true) {
        long m = mdist(rng);
        if (m >= max_exp) continue;
        std::uniform_int_distribution<long> edist(m + 1, max_exp);
        std::map<long, Rational> terms;
        int n = ndist(rng);
        for (int i = 0; i < n; ++i) terms[edist(rng)] = Rational(cdist(rng));
        long g = m;
        for (const auto& [a, c] : terms) g = std::gcd(g, a);
        if (g != 1) continue;
        return PuiseuxBranch(m, std::move(terms));
    }
}

} // namespace

TEST_CASE("characteristic exponents") {
    CharExponents a = characteristic_exponents(B("8:u^10+u^11"));
    CHECK(a.e == std::vector<long>{8, 10, 11});
    CHECK(a.b == std::vector<long>{8, 2, 1});

    CharExponents b = characteristic_exponents(B("8:u^12+u^14+u^15"));
    CHECK(b.e == std::vector<long>{8, 12, 14, 15});
    CHECK(b.b == std::vector<long>{8, 4, 2, 1});

    CharExponents s = characteristic_exponents(B("1:0"));
    CHECK(s.e == std::vector<long>{1});
}

TEST_CASE("tangent terms and gcd-stable exponents are skipped") {
    CHECK(characteristic_exponents(B("4:u^4+u^6+u^7")).e ==
          std::vector<long>{4, 6, 7});
    CHECK(characteristic_exponents(B("4:u^6+u^8+u^9")).e ==
          std::vector<long>{4, 6, 9});
}

TEST_CASE("exponent counts") {
    CHECK(count_exponents(B("4:u^6+u^7")) == 3);
    CHECK(count_exponents(B("3:u^4")) == 2);
    CHECK(count_exponents(B("6:u^8+u^9")) == 3);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(B("8:u^10+u^11")) == 8);
    PlaneCurveGerm two_cusps({B("2:u^3"), B("2:u^2+u^3")});
    CHECK(multiplicity(two_cusps) == 4);
    CHECK(multiplicity(B("1:0")) == 1);
}

TEST_CASE("branch construction rejects bad input") {
    CHECK_THROWS_AS(PuiseuxBranch(2, {{4, Rational(1)}}), Error);   // cover of (u, u^2)
    CHECK_THROWS_AS(PuiseuxBranch(3, {{2, Rational(1)}}), Error);   // exponent below m
    CHECK_THROWS_AS(PuiseuxBranch(2, {}), Error);                   // (u^2, 0)
    CHECK_THROWS_AS(PlaneCurveGerm({B("2:u^3"), B("2:u^3")}), Error);
    CHECK_THROWS_AS(PlaneCurveGerm({}), Error);
}

TEST_CASE("exponent count never exceeds sigma(m)+1") {
    std::mt19937 rng(101);
    for (int i = 0; i < 10000; ++i) {
        PuiseuxBranch b = random_primitive_branch(rng, 60, 90);
        CharExponents ce = characteristic_exponents(b);
        CHECK(ce.count() <= sigma(b.multiplicity()) + 1);
        CHECK(ce.b.back() == 1);
        for (std::size_t j = 1; j < ce.b.size(); ++j) CHECK(ce.b[j] < ce.b[j - 1]);
    }
}

TEST_CASE("exponents are invariant under reparametrization u -> c*u") {
    std::mt19937 rng(103);
    for (int i = 0; i < 200; ++i) {
        PuiseuxBranch b = random_primitive_branch(rng, 20, 40);
        for (Rational c : {Rational(2), Rational(-1), Rational(1, 2)}) {
            CHECK(characteristic_exponents(b.rescale(c)).e ==
                  characteristic_exponents(b).e);
        }
    }
}
