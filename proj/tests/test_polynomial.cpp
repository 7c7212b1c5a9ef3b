#include <doctest.h>

#include <random>

#include "mufold/parser.hpp"
#include "mufold/polynomial.hpp"

using namespace mufold;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

// random sparse polynomial over the given variables
Polynomial random_poly(std::mt19937& rng, std::vector<Var> vars, int max_deg,
                       int terms) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Polynomial p;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (Var v : vars) m.set(v, deg(rng));
        int c = coef(rng);
        if (c) p.add_term(m, Rational(c));
    }
    return p;
}

} // namespace

TEST_CASE("exact division") {
    CHECK(exact_divide(P("y^2-z^2"), P("y-z")) == P("y+z"));
    CHECK(exact_divide(P("y^3-z^3"), P("y-z")) == P("y^2+y*z+z^2"));
    CHECK(exact_divide(P("x*y-x*z"), P("y-z")) == P("x"));
    CHECK_THROWS_WITH_AS(exact_divide(P("x^2+y"), P("x+y")), doctest::Contains("remainder"),
                         Error);
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_poly(rng, {Var::x, Var::y, Var::z}, 3, 4);
        Polynomial b = random_poly(rng, {Var::x, Var::y, Var::z}, 3, 3);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("resultant basics") {
    CHECK(resultant(P("y+z"), P("y^2+y*z+z^2+x^2"), Var::z) == P("x^2+y^2"));
    CHECK(resultant(P("y+z"), P("x"), Var::z) == P("x"));

    // v is internal only, so the implicitization pair is built directly
    Polynomial fv = P("x") - Polynomial::variable(Var::v, 2);
    Polynomial gv = P("y") - Polynomial::variable(Var::v, 3);
    Polynomial cusp = resultant(fv, gv, Var::v);
    bool plus = cusp == P("y^2-x^3");
    bool minus = cusp == P("x^3-y^2");
    CHECK((plus || minus));

    CHECK_THROWS_AS((void)resultant(P("x"), P("y"), Var::z), Error);
    CHECK(resultant(Polynomial(), P("y+z"), Var::z).is_zero());
}

TEST_CASE("resultant equals the product over the roots") {
    // for f = (z - a)(z - b) monic in z, Res_z(f, g) = g(a) * g(b)
    std::mt19937 rng(11);
    Polynomial z = Polynomial::variable(Var::z);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_poly(rng, {Var::x, Var::y}, 2, 3);
        Polynomial b = random_poly(rng, {Var::x, Var::y}, 2, 3);
        Polynomial g = random_poly(rng, {Var::x, Var::y, Var::z}, 2, 4);
        if (g.degree_in(Var::z) < 1) continue;
        Polynomial f = (z - a) * (z - b);
        Polynomial expected = g.substitute(Var::z, a) * g.substitute(Var::z, b);
        CHECK(resultant(f, g, Var::z) == expected);
    }
}

TEST_CASE("resultant symmetry and common factors") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        Polynomial f = random_poly(rng, {Var::y, Var::z}, 3, 3);
        Polynomial g = random_poly(rng, {Var::y, Var::z}, 3, 3);
        if (f.degree_in(Var::z) < 1 || g.degree_in(Var::z) < 1) continue;
        Polynomial rf = resultant(f, g, Var::z);
        Polynomial rg = resultant(g, f, Var::z);
        CHECK((rf == rg || rf == -rg));
        // a shared z-factor kills the resultant
        Polynomial h = P("z+y") + Polynomial(i % 3);
        CHECK(resultant(f * h, g * h, Var::z).is_zero());
    }
}

TEST_CASE("order at the origin") {
    CHECK(P("x^2+y^3").order_at_origin().value() == 2);
    CHECK(Polynomial().order_at_origin().is_infinite());
    Polynomial h = P(
        "y^8-2*x^5*y^4-8*x^4*y^5-26*y^9+x^10-8*x^9*y+12*x^8*y^2+52*x^5*y^5"
        "+208*x^4*y^6-x^11-26*x^10*y+208*x^9*y^2-312*x^8*y^3+26*x^11*y");
    CHECK(h.order_at_origin().value() == 8);
}

TEST_CASE("order is multiplicative") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_poly(rng, {Var::x, Var::y}, 4, 3);
        Polynomial g = random_poly(rng, {Var::x, Var::y}, 4, 3);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).order_at_origin().value() ==
              f.order_at_origin().value() + g.order_at_origin().value());
    }
}

TEST_CASE("squarefree part") {
    auto r1 = squarefree_part(P("x^2"), Var::x);
    CHECK(r1.part.primitive_part() == P("x"));
    CHECK_FALSE(r1.is_squarefree);

    auto r2 = squarefree_part(P("x^2+y^2"), Var::x);
    CHECK(r2.part.primitive_part() == P("x^2+y^2"));
    CHECK(r2.is_squarefree);

    auto r3 = squarefree_part(P("(y-x^2)^2*(y+x)"), Var::y);
    CHECK(r3.part.primitive_part() == P("(y-x^2)*(y+x)").primitive_part());
    CHECK_FALSE(r3.is_squarefree);
}

TEST_CASE("squarefree part of f^2 g keeps the radical") {
    std::mt19937 rng(19);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = P("x+y") * Rational(i + 1) + Polynomial(1 + i % 3);
        Polynomial g = P("y-x^2") + Polynomial(i % 2);
        Polynomial input = f * f * g;
        auto r = squarefree_part(input, Var::y);
        CHECK(r.part.primitive_part() == (f * g).primitive_part());
        CHECK_FALSE(r.is_squarefree);
    }
}

TEST_CASE("series solve of the first coordinate") {
    Polynomial xi1 = solve_first_component(P("x+t*y^14"), 20);
    CHECK(xi1 == P("-t*y^14"));

    CHECK(solve_first_component(P("x"), 8).is_zero());

    Polynomial xi3 = solve_first_component(P("x-y^2-x^2"), 6);
    CHECK(xi3 == P("y^2+y^4+2*y^6"));

    CHECK_THROWS_AS((void)solve_first_component(P("y^2"), 6), Error);

    // any unit linear coefficient of x is normalized away
    CHECK(solve_first_component(P("2*x - y^2"), 6) == P("1/2*y^2"));
}

TEST_CASE("series solve leaves a high-order residual") {
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        Polynomial tail = random_poly(rng, {Var::y, Var::t}, 3, 3);
        // constant-free square so the germ stays through the origin
        Polynomial sq = random_poly(rng, {Var::x, Var::y}, 2, 2) * P("x") +
                        random_poly(rng, {Var::y}, 2, 2) * P("y");
        Polynomial f1 = Polynomial::variable(Var::x) +
                        tail * Polynomial::variable(Var::t) +
                        sq * sq * Rational(i % 3);
        int n = 10;
        Polynomial xi = solve_first_component(f1, n);
        Polynomial residual = f1.substitute_truncated(Var::x, xi, n);
        CHECK(residual.order_at_origin() > n);
    }
}

TEST_CASE("weighted resultant agrees with the plain one") {
    std::array<long, kNumVars> w{};
    w[static_cast<int>(Var::x)] = 1;
    w[static_cast<int>(Var::y)] = 1;
    w[static_cast<int>(Var::z)] = 1;
    Polynomial f = P("y+z");
    Polynomial g = P("y^2+y*z+z^2+x^2");
    CHECK(resultant_weighted(f, g, Var::z, w) == resultant(f, g, Var::z));

    // weights (5,1): divided differences of (x, y^6+x*y, y^8+2*x*y^3)
    std::array<long, kNumVars> w2{};
    w2[static_cast<int>(Var::x)] = 5;
    w2[static_cast<int>(Var::y)] = 1;
    w2[static_cast<int>(Var::z)] = 1;
    Polynomial phi = exact_divide(P("y^6+x*y") - P("z^6+x*z"), P("y-z"));
    Polynomial psi = exact_divide(P("y^8+2*x*y^3") - P("z^8+2*x*z^3"), P("y-z"));
    CHECK(resultant_weighted(phi, psi, Var::z, w2) == resultant(phi, psi, Var::z));

    // homogeneous divided differences of the quartic counterexample base
    Polynomial phi3 = exact_divide(P("y^4") - P("z^4"), P("y-z"));
    Polynomial psi3 = exact_divide(P("x*y^5+x^5*y+y^6") - P("x*z^5+x^5*z+z^6"),
                                   P("y-z"));
    CHECK(resultant_weighted(phi3, psi3, Var::z, w) ==
          resultant(phi3, psi3, Var::z));
}

TEST_CASE("series solve handles x-dependent corrections") {
    Polynomial f1 = P("x + t*x*y + t*y^3 - x^2*y");
    int n = 12;
    Polynomial xi = solve_first_component(f1, n);
    CHECK_FALSE(xi.uses(Var::x));
    CHECK(f1.substitute_truncated(Var::x, xi, n).order_at_origin() > n);
    // leading correction comes straight from the t*y^3 term
    CHECK(xi.truncate_total_degree(4) == P("-t*y^3"));
}
