#include <doctest.h>

#include <climits>

#include "mufold/cli.hpp"
#include "mufold/parser.hpp"
#include "mufold/unfolding.hpp"

using namespace mufold;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }
CorankOneGerm G(const std::string& spec) { return parse_germ_spec(spec); }

Unfolding U(const std::string& germ, const std::string& d1, const std::string& d2,
            const std::string& d3) {
    auto d = [](const std::string& s) {
        return s.empty() ? Polynomial() : parse_polynomial(s);
    };
    return Unfolding(G(germ), d(d1), d(d2), d(d3));
}

const char* kIntroBase = "y^4|x*y^5+x^5*y+y^6";
const char* kRowOne = "y^16+x*y^15|y^18+x*y^17+x^17*y";

} // namespace

TEST_CASE("unfolding construction") {
    // canonical printing is graded-lex descending in every coordinate
    CHECK(U(kRowOne, "t*y^14", "", "").str() ==
          "(y^14*t + x, x*y^15 + y^16, x^17*y + x*y^17 + y^18)");
    CHECK_THROWS_AS(U("y^2|x*y", "y^2", "", ""), Error); // no t factor
    CHECK_THROWS_AS(U("y^2|x*y", "t", "", ""), Error);   // moves the origin
}

TEST_CASE("non-negative degree") {
    Unfolding intro = U(kIntroBase, "", "", "t*y^7");
    auto type = detect_qh_type(intro.base());
    REQUIRE(type);
    CHECK(is_non_negative_degree(intro, *type));

    Unfolding row1 = U(kRowOne, "t*y^14", "", "");
    CHECK(is_non_negative_degree(row1, *detect_qh_type(row1.base())));

    Unfolding bad = U("y^2|x*y", "", "t*y", "");
    CHECK_FALSE(is_non_negative_degree(bad, *detect_qh_type(bad.base())));
}

TEST_CASE("topological triviality tracks the degree criterion") {
    CHECK(is_topologically_trivial(U(kIntroBase, "", "", "t*y^7")).trivial);
    CHECK(is_topologically_trivial(U(kRowOne, "t*y^14", "", "")).trivial);
    CHECK_FALSE(is_topologically_trivial(U("y^2|x*y", "", "t*y", "")).trivial);
    CHECK_THROWS_AS((void)is_topologically_trivial(U("y^2+x^3|x*y", "", "", "t*y^9")),
                    Error);
}

TEST_CASE("equimultiplicity of image sections") {
    EquimultiplicityResult trivial = is_equimultiple(U("y^2|x*y", "", "", ""));
    CHECK(trivial.equimultiple);
    CHECK(trivial.multiplicity_base == 2);

    EquimultiplicityResult jump = is_equimultiple(U("y^2|x*y", "", "t*y", ""));
    CHECK_FALSE(jump.equimultiple);
    CHECK(jump.multiplicity_base == 2);
    CHECK(jump.multiplicity_deformed == 1);

    EquimultiplicityResult row1 = is_equimultiple(U(kRowOne, "t*y^14", "", ""));
    CHECK(row1.equimultiple);
    CHECK(row1.multiplicity_base == 16);
    CHECK(row1.multiplicity_deformed == 16);
}

TEST_CASE("image multiplicity of parametrized space branches") {
    CHECK(image_multiplicity(SpaceBranchParam(Polynomial(), P("u^16"), P("u^18"))) == 8);
    CHECK(image_multiplicity(SpaceBranchParam(P("u^14"), P("u^16"), P("u^18"))) == 7);
    CHECK(image_multiplicity(SpaceBranchParam(P("u^2"), P("u^2"), P("u^3"))) == 2);
    CHECK_THROWS_AS(
        (void)image_multiplicity(SpaceBranchParam(Polynomial(), Polynomial(), Polynomial())),
        Error);
}

TEST_CASE("image multiplicity is a reparametrization invariant") {
    for (int j = 1; j <= 4; ++j) {
        auto up = [&](int e) { return Polynomial::variable(Var::u, e * j); };
        CHECK(image_multiplicity(SpaceBranchParam(Polynomial(), up(16), up(18))) == 8);
        CHECK(image_multiplicity(SpaceBranchParam(up(14), up(16), up(18))) == 7);
    }
}

TEST_CASE("base multiplicity equals the smaller y-order of p and q") {
    for (const char* germ : {"y^2|x*y", "y^6+x*y|y^8+2*x*y^3", kIntroBase, kRowOne,
                             "y^3|y^5+x*y"}) {
        Unfolding F = U(germ, "", "", "");
        EquimultiplicityResult eq = is_equimultiple(F);
        Polynomial p0 = F.base().p().substitute(Var::x, Rational(0));
        Polynomial q0 = F.base().q().substitute(Var::x, Rational(0));
        long expected = std::min(
            p0.is_zero() ? LONG_MAX : p0.order_at_origin().value(),
            q0.is_zero() ? LONG_MAX : q0.order_at_origin().value());
        CHECK(eq.multiplicity_base == expected);
        auto type = detect_qh_type(F.base());
        REQUIRE(type);
        CHECK(eq.multiplicity_base == type->m());
    }
}

TEST_CASE("whitney verdicts") {
    // constant family
    UnfoldingVerdict trivial = whitney_verdict(U("y^2|x*y", "", "", ""));
    CHECK(trivial.whitney == WhitneyStatus::Equisingular);
    CHECK(trivial.equimultiple);

    // minimal slice plus a non-negative deformation
    UnfoldingVerdict minimal =
        whitney_verdict(U("y^6+x*y|y^8+2*x*y^3", "", "", "t*y^9"));
    CHECK(minimal.whitney == WhitneyStatus::Equisingular);
    CHECK(minimal.topologically_trivial);
    CHECK(minimal.slice_mu_base == 36);

    // negative degree: the question is vacuous
    UnfoldingVerdict vacuous = whitney_verdict(U("y^2|x*y", "", "t*y", ""));
    CHECK(vacuous.whitney == WhitneyStatus::NotApplicable);
    CHECK_FALSE(vacuous.topologically_trivial);

    // the first-coordinate family over the small homogeneous base
    UnfoldingVerdict drop = whitney_verdict(U(kIntroBase, "t*y^2", "", ""));
    CHECK(drop.whitney == WhitneyStatus::NotEquisingular);
    CHECK(drop.slice_mu_base == 18);
    CHECK(drop.slice_mu_deformed == 16);
    CHECK(drop.equimultiple);

    // non-minimal slice deformed in the last coordinate: out of reach
    UnfoldingVerdict open_case = whitney_verdict(U(kIntroBase, "", "", "t*y^7"));
    CHECK(open_case.whitney == WhitneyStatus::Unknown);
    CHECK(open_case.topologically_trivial);
    CHECK(open_case.slice_mu_base == 18);
}

TEST_CASE("verdicts never pair Whitney equisingularity with a broken family") {
    for (const auto& spec :
         {std::make_tuple(std::string("y^2|x*y"), std::string(""), std::string("t*y"),
                          std::string("")),
          std::make_tuple(std::string(kIntroBase), std::string("t*y^2"), std::string(""),
                          std::string("")),
          std::make_tuple(std::string(kIntroBase), std::string(""), std::string(""),
                          std::string("t*y^7"))}) {
        Unfolding F =
            U(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec), std::get<3>(spec));
        UnfoldingVerdict v = whitney_verdict(F);
        if (!v.topologically_trivial)
            CHECK(v.whitney != WhitneyStatus::Equisingular);
    }
}

TEST_CASE("counterexample construction") {
    CorankOneGerm intro = G(kIntroBase);
    CounterexampleResult res = counterexample_unfolding(intro, *detect_qh_type(intro));
    CHECK(res.unfolding.delta1() == P("t*y^2"));
    CHECK(res.slice_mu_base == 18);
    CHECK(res.slice_mu_deformed == 16);

    // a minimal slice never satisfies the hypotheses
    CorankOneGerm g = G("y^6+x*y|y^8+2*x*y^3");
    CHECK_THROWS_AS((void)counterexample_unfolding(g, *detect_qh_type(g)), Error);

    // two-exponent slices are excluded
    CorankOneGerm cross = G("y^2|x*y");
    CHECK_THROWS_AS((void)counterexample_unfolding(cross, *detect_qh_type(cross)),
                    Error);
}
