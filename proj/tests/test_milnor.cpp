#include <doctest.h>

#include <random>

#include "mufold/arith.hpp"
#include "mufold/cli.hpp"
#include "mufold/milnor.hpp"
#include "mufold/normalform.hpp"
#include "mufold/parser.hpp"

using namespace mufold;

namespace {

PuiseuxBranch B(const std::string& spec) { return parse_branch_spec(spec); }
Polynomial P(const std::string& s) { return parse_polynomial(s); }

MilnorNumber mu_of(const std::string& spec) {
    return milnor_from_exponents(characteristic_exponents(B(spec)));
}

} // namespace

TEST_CASE("Milnor number from exponents") {
    CHECK(mu_of("8:u^10+u^11") == 64);
    CHECK(mu_of("8:u^12+u^14+u^15") == 84);
    CHECK(mu_of("6:u^8+u^9") == 36);
    CHECK(mu_of("1:0") == 0);
}

TEST_CASE("exponent extraction drives the Milnor value") {
    // same support written with the middle exponent swapped in: the scan
    // records (8,20,21) and a smaller mu than the intended (8,20,22,23)
    CHECK(characteristic_exponents(B("8:u^20+u^22+u^23")).e ==
          std::vector<long>{8, 20, 22, 23});
    CHECK(mu_of("8:u^20+u^22+u^23") == 140);
    CHECK(characteristic_exponents(B("8:u^20+u^21+u^22")).e ==
          std::vector<long>{8, 20, 21});
    CHECK(mu_of("8:u^20+u^21+u^22") == 136);
}

TEST_CASE("closed form for minimal Milnor numbers") {
    CHECK(milnor_minimal_closed_form(36, 2) == 1260);
    CHECK(milnor_minimal_closed_form(36, 3) == 1296);
    CHECK(milnor_minimal_closed_form(36, 4) == 1372);
    CHECK(milnor_minimal_closed_form(36, 5) == 1696);
    CHECK(milnor_minimal_closed_form(7, 2) == 42);
}

TEST_CASE("closed form matches the exponent formula") {
    for (long m = 2; m <= 60; ++m)
        for (int k = 2; k <= sigma(m) + 1; ++k)
            CHECK(milnor_minimal_closed_form(m, k) ==
                  milnor_from_exponents(minimal_char_exponents(m, k)));
}

TEST_CASE("minimal values increase with the exponent count") {
    for (long m = 4; m <= 60; ++m) {
        if (sigma(m) < 2) continue; // prime
        for (int k = 2; k < sigma(m) + 1; ++k)
            CHECK(milnor_minimal_closed_form(m, k) <
                  milnor_minimal_closed_form(m, k + 1));
    }
}

TEST_CASE("implicitization") {
    CHECK(implicitize(B("2:u^3")) == P("x^3-y^2"));
    CHECK(implicitize(B("1:0")) == P("y"));
    CHECK(implicitize(B("1:u")) == P("x-y")); // sign-normalized
}

TEST_CASE("implicitization agrees with the defining resultant") {
    std::mt19937 rng(211);
    std::uniform_int_distribution<int> cdist(-3, 3);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<long> mdist(1, 5);
        long m = mdist(rng);
        std::map<long, Rational> terms;
        std::uniform_int_distribution<long> edist(m + 1, m + 7);
        int c = cdist(rng);
        terms[edist(rng)] = Rational(c == 0 ? 1 : c);
        long g = m;
        for (const auto& [a, co] : terms) g = std::gcd(g, a);
        if (g != 1) continue;
        PuiseuxBranch b(m, terms);

        Polynomial phi;
        for (const auto& [a, co] : b.y_terms())
            phi += Polynomial::term(co, Monomial::power(Var::v, static_cast<int>(a)));
        Polynomial f = Polynomial::variable(Var::x) -
                       Polynomial::variable(Var::v, static_cast<int>(m));
        Polynomial gpoly = Polynomial::variable(Var::y) - phi;
        Polynomial direct = resultant(f, gpoly, Var::v).primitive_part();
        CHECK(implicitize(b) == direct);
    }
}

TEST_CASE("intersection multiplicities") {
    // cusp against the transposed cusp: order of x^3 - y^2 along (u^3, u^2)
    Polynomial h = implicitize(B("2:u^3"));
    Polynomial sub = h.substitute(Var::x, P("u^3")).substitute(Var::y, P("u^2"));
    CHECK(sub.order_at_origin().value() == 4);

    // the same configuration in generic coordinates
    IntersectionNumber i1 = intersection_multiplicity(B("2:u^3"), B("2:u^2+u^3"));
    CHECK(i1.value == 4);
    CHECK_FALSE(i1.infinite);

    // two cusps sharing their tangent meet deeper than m1*m2
    IntersectionNumber i2 = intersection_multiplicity(B("2:u^3"), B("2:u^3+u^5"));
    CHECK(i2.value == 8);

    IntersectionNumber i3 = intersection_multiplicity(B("1:0"), B("1:u"));
    CHECK(i3.value == 1);

    // equal branch under u -> -u: a shared branch, not a finite number
    IntersectionNumber i4 = intersection_multiplicity(B("2:u^3"), B("2:-u^3"));
    CHECK(i4.infinite);
}

TEST_CASE("intersection is symmetric and bounded by the product") {
    std::mt19937 rng(223);
    std::uniform_int_distribution<long> mdist(1, 4);
    std::uniform_int_distribution<int> tdist(0, 2);
    for (int i = 0; i < 40; ++i) {
        long ma = mdist(rng), mb = mdist(rng);
        std::map<long, Rational> ta, tb;
        ta[ma + 1 + tdist(rng)] = Rational(1);
        tb[mb + 1 + tdist(rng)] = Rational(1);
        int tangent_a = tdist(rng), tangent_b = tdist(rng);
        if (tangent_a) ta[ma] = Rational(tangent_a);
        if (tangent_b) tb[mb] = Rational(tangent_b);
        auto fix = [](long m, std::map<long, Rational> t) {
            long g = m;
            for (const auto& [a, c] : t) g = std::gcd(g, a);
            if (g != 1) t[m + 1] = Rational(1);
            return PuiseuxBranch(m, t);
        };
        PuiseuxBranch a = fix(ma, ta), b = fix(mb, tb);
        if (a == b) continue;
        IntersectionNumber ab = intersection_multiplicity(a, b);
        IntersectionNumber ba = intersection_multiplicity(b, a);
        if (ab.infinite) {
            CHECK(ba.infinite);
            continue;
        }
        CHECK(ab.value == ba.value);
        CHECK(ab.value >= a.multiplicity() * b.multiplicity());
        Rational tan_a = a.y_terms().count(a.multiplicity())
                             ? a.y_terms().at(a.multiplicity())
                             : Rational(0);
        Rational tan_b = b.y_terms().count(b.multiplicity())
                             ? b.y_terms().at(b.multiplicity())
                             : Rational(0);
        bool transversal = ab.value == a.multiplicity() * b.multiplicity();
        CHECK(transversal == (tan_a != tan_b));
    }
}

TEST_CASE("multi-branch Milnor numbers") {
    PlaneCurveGerm cusps({B("2:u^3"), B("2:u^2+u^3")});
    CHECK(milnor_multibranch(cusps) == 11);

    PlaneCurveGerm single({B("8:u^10+u^11")});
    CHECK(milnor_multibranch(single) == 64);

    PlaneCurveGerm node({B("1:0"), B("1:u")});
    CHECK(milnor_multibranch(node) == 1);

    CHECK_THROWS_AS((void)milnor_multibranch(PlaneCurveGerm({B("2:u^3"), B("2:-u^3")})),
                    Error);
}

TEST_CASE("resultant oracle on classical curves") {
    CHECK(milnor_implicit_oracle(P("x^2-y^3")) == 2);
    CHECK(milnor_implicit_oracle(P("x^2+y^2")) == 1);
    CHECK(milnor_implicit_oracle(P("y-x^2")) == 0);
    CHECK(milnor_implicit_oracle(P("y")) == 0);
    CHECK(milnor_implicit_oracle(implicitize(B("1:0"))) == 0);
    CHECK(milnor_implicit_oracle(P("(x^2-y^3)*(y^2-x^3)")) == 11);
    CHECK_THROWS_AS((void)milnor_implicit_oracle(P("x^2")), Error);
    CHECK_THROWS_AS((void)milnor_implicit_oracle(P("x^2*y")), Error);
}

TEST_CASE("an independent equation of the eight-ten-eleven branch") {
    // a published degree-12 equation of the same germ, background-checked:
    // it is the minimal equation times the local unit 26y - 1
    Polynomial h = P(
        "y^8-2*x^5*y^4-8*x^4*y^5-26*y^9+x^10-8*x^9*y+12*x^8*y^2+52*x^5*y^5"
        "+208*x^4*y^6-x^11-26*x^10*y+208*x^9*y^2-312*x^8*y^3+26*x^11*y");
    Polynomial on_branch =
        h.substitute(Var::x, P("u^8")).substitute(Var::y, P("u^10+u^11"));
    CHECK(on_branch.is_zero());

    Polynomial mine = implicitize(B("8:u^10+u^11"));
    CHECK(exact_divide(h, mine) == P("26*y-1"));

    CHECK(milnor_implicit_oracle(h) == 64);
    CHECK(milnor_implicit_oracle(mine) == 64);
}

TEST_CASE("weighted-homogeneous Milnor formula") {
    CHECK(milnor_quasihomogeneous_curve(6, 3, 2) == 2);  // the cusp
    CHECK(milnor_quasihomogeneous_curve(2, 1, 1) == 1);  // the node
    CHECK_THROWS_AS((void)milnor_quasihomogeneous_curve(7, 2, 3), Error);
    CHECK_THROWS_AS((void)milnor_quasihomogeneous_curve(4, 2, 2), Error);
}

TEST_CASE("formula and oracle agree on a sampled corpus") {
    std::mt19937 rng(227);
    std::uniform_int_distribution<long> mdist(2, 5);
    std::uniform_int_distribution<int> cdist(1, 4);
    int done = 0;
    while (done < 25) {
        long m = mdist(rng);
        std::uniform_int_distribution<long> edist(m + 1, m + 8);
        std::map<long, Rational> terms;
        terms[edist(rng)] = Rational(cdist(rng));
        terms[edist(rng)] = Rational(cdist(rng));
        long g = m;
        for (const auto& [a, c] : terms) g = std::gcd(g, a);
        if (g != 1) continue;
        PuiseuxBranch b(m, terms);
        CHECK(milnor_from_exponents(characteristic_exponents(b)) ==
              milnor_implicit_oracle(implicitize(b)));
        ++done;
    }
}
