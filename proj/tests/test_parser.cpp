#include <doctest.h>

#include <random>

#include "mufold/parser.hpp"

using namespace mufold;

namespace {
Polynomial P(const std::string& s) { return parse_polynomial(s); }
}

TEST_CASE("expressions lower to canonical polynomials") {
    Polynomial a = P("y^16 + x*y^15");
    CHECK(a.term_count() == 2);
    CHECK(a.str() == "x*y^15 + y^16");

    CHECK(P("u^48+u^52+u^54+u^55").degree_in(Var::u) == 55);
    CHECK(P("2*(x+y)^2") == P("2*x^2+4*x*y+2*y^2"));
    CHECK(P("-x^2") == -P("x^2"));
    CHECK(P("3/2*x - 1/2*x") == P("x"));
    CHECK(P("  y ^ 2\n+ x ") == P("y^2+x"));
    CHECK(P("0").is_zero());
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_WITH_AS((void)P("y^^2"), doctest::Contains("1:3"), Error);
    CHECK_THROWS_AS((void)P("x y"), Error);          // implicit multiplication
    CHECK_THROWS_AS((void)P("x^-2"), Error);         // negative exponent
    CHECK_THROWS_AS((void)P("x/2"), Error);          // division is not an operator
    CHECK_THROWS_AS((void)P("(x+y"), Error);         // unbalanced
    CHECK_THROWS_AS((void)P(""), Error);
    CHECK_THROWS_AS((void)P("x^2^3"), Error);        // chained exponent computes nothing
}

TEST_CASE("unknown variables are rejected with their names") {
    CHECK_THROWS_WITH_AS((void)P("w+1"), doctest::Contains("'w'"), Error);
    CHECK_THROWS_WITH_AS((void)P("ab"), doctest::Contains("'ab'"), Error);
    CHECK_THROWS_WITH_AS((void)P("v^2"), doctest::Contains("'v'"), Error);
    CHECK(P("z^2+t+u") == Polynomial::variable(Var::z, 2) +
                              Polynomial::variable(Var::t) +
                              Polynomial::variable(Var::u));
}

TEST_CASE("print-parse round trip is the identity") {
    std::mt19937 rng(509);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int i = 0; i < 200; ++i) {
        Polynomial p;
        for (int terms = 0; terms < 5; ++terms) {
            Monomial m;
            m.set(Var::x, deg(rng));
            m.set(Var::y, deg(rng));
            m.set(Var::t, deg(rng));
            m.set(Var::u, deg(rng));
            Rational c(coef(rng), den(rng));
            c.canonicalize();
            p.add_term(m, c);
        }
        CHECK(parse_polynomial(p.str()) == p);
    }
}
