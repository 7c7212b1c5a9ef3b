#include "mufold/unfolding.hpp"

#include <algorithm>
#include <numeric>

#include "mufold/normalform.hpp"

namespace mufold {

namespace {

void check_delta(const Polynomial& d, const char* name) {
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (v == Var::x || v == Var::y || v == Var::t) continue;
        if (d.uses(v))
            fail(ErrorCode::PreconditionViolated,
                 std::string(name) + " must be a polynomial in x, y, t");
    }
    for (const auto& [m, c] : d.terms()) {
        if (m[Var::t] == 0)
            fail(ErrorCode::PreconditionViolated,
                 std::string(name) + " must vanish at t = 0");
        if (m[Var::x] == 0 && m[Var::y] == 0)
            fail(ErrorCode::PreconditionViolated,
                 std::string(name) + " must preserve the origin");
    }
}

} // namespace

Unfolding::Unfolding(CorankOneGerm base, Polynomial delta1, Polynomial delta2,
                     Polynomial delta3)
    : base_(std::move(base)), delta1_(std::move(delta1)),
      delta2_(std::move(delta2)), delta3_(std::move(delta3)) {
    check_delta(delta1_, "delta1");
    check_delta(delta2_, "delta2");
    check_delta(delta3_, "delta3");
}

Polynomial Unfolding::first() const {
    return Polynomial::variable(Var::x) + delta1_;
}
Polynomial Unfolding::second() const { return base_.p() + delta2_; }
Polynomial Unfolding::third() const { return base_.q() + delta3_; }

bool Unfolding::is_trivial() const {
    return delta1_.is_zero() && delta2_.is_zero() && delta3_.is_zero();
}

std::string Unfolding::str() const {
    return "(" + first().str() + ", " + second().str() + ", " + third().str() + ")";
}

const char* whitney_status_name(WhitneyStatus s) {
    switch (s) {
        case WhitneyStatus::Equisingular: return "Equisingular";
        case WhitneyStatus::NotEquisingular: return "NotEquisingular";
        case WhitneyStatus::Unknown: return "Unknown";
        case WhitneyStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

SpaceBranchParam::SpaceBranchParam(Polynomial a, Polynomial b, Polynomial c)
    : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {
    if (c1.is_zero() && c2.is_zero() && c3.is_zero())
        fail(ErrorCode::PreconditionViolated, "zero space branch");
    for (const Polynomial* p : {&c1, &c2, &c3}) {
        for (int i = 0; i < kNumVars; ++i) {
            Var v = static_cast<Var>(i);
            if (v != Var::u && p->uses(v))
                fail(ErrorCode::PreconditionViolated,
                     "space branch coordinates must be polynomials in u");
        }
        if (!p->is_zero() && p->constant_value() != 0)
            fail(ErrorCode::PreconditionViolated,
                 "space branch must pass through the origin");
    }
}

bool is_non_negative_degree(const Unfolding& F, const QhType& type) {
    std::array<long, kNumVars> w{};
    w[static_cast<int>(Var::x)] = type.w1;
    w[static_cast<int>(Var::y)] = type.w2;
    auto dp = F.base().p().weighted_homogeneous_degree(w);
    auto dq = F.base().q().weighted_homogeneous_degree(w);
    if (!dp || !dq)
        fail(ErrorCode::PreconditionViolated,
             "base germ does not match the quasihomogeneous type");
    const std::array<std::pair<const Polynomial*, long>, 3> checks = {
        std::make_pair(&F.delta1(), type.w1),
        std::make_pair(&F.delta2(), *dp),
        std::make_pair(&F.delta3(), *dq)};
    for (const auto& [delta, threshold] : checks)
        for (const auto& [m, c] : delta->terms())
            if (Polynomial::weighted_degree(m, w) < threshold) return false;
    return true;
}

TrivialityResult is_topologically_trivial(const Unfolding& F) {
    auto type = detect_qh_type(F.base());
    if (!type)
        fail(ErrorCode::NotQuasihomogeneous,
             "triviality criterion needs a quasihomogeneous base");
    TrivialityResult out;
    out.trivial = is_non_negative_degree(F, *type);
    out.tag = "non-negative degree, equivalent to topological triviality for "
              "finitely determined quasihomogeneous corank-1 germs (Damon's "
              "criterion plus the constancy of the double-point Milnor number)";
    return out;
}

namespace {

// minimum y-order of the two last coordinates after eliminating x, at a
// fixed parameter value; nullopt when both vanish identically
std::optional<long> section_order(const Polynomial& a, const Polynomial& b,
                                  const Rational& tval) {
    std::optional<long> best;
    for (const Polynomial* p : {&a, &b}) {
        Polynomial s = p->substitute(Var::t, tval);
        if (s.is_zero()) continue;
        long ord = s.order_at_origin().value();
        best = best ? std::min(*best, ord) : ord;
    }
    return best;
}

struct SectionOrders {
    long at_zero;
    long at_generic;
};

SectionOrders image_section_orders(const Unfolding& F, int truncation) {
    Polynomial xi = solve_first_component(F.first(), truncation);
    Polynomial a = F.second().substitute_truncated(Var::x, xi, truncation);
    Polynomial b = F.third().substitute_truncated(Var::x, xi, truncation);
    auto m0 = section_order(a, b, Rational(0));
    auto m1 = section_order(a, b, Rational(1));
    auto m2 = section_order(a, b, Rational(2));
    if (!m0 || !m1 || !m2)
        fail(ErrorCode::PreconditionViolated,
             "image section vanished identically");
    if (*m1 != *m2)
        fail(ErrorCode::TruncationTooSmall,
             "generic-parameter orders disagree between t = 1 and t = 2");
    return {*m0, *m1};
}

} // namespace

EquimultiplicityResult is_equimultiple(const Unfolding& F) {
    int maxdeg = std::max({F.first().total_degree(), F.second().total_degree(),
                           F.third().total_degree(), 1});
    int N = 4 * maxdeg;
    SectionOrders orders = image_section_orders(F, N);
    if (orders.at_zero * 2 >= N || orders.at_generic * 2 >= N) {
        // suspiciously close to the truncation bound: raise and retry once
        SectionOrders again = image_section_orders(F, 2 * N);
        if (again.at_zero != orders.at_zero || again.at_generic != orders.at_generic)
            fail(ErrorCode::TruncationTooSmall,
                 "section orders unstable under raising the truncation bound");
    }
    EquimultiplicityResult out;
    out.multiplicity_base = orders.at_zero;
    out.multiplicity_deformed = orders.at_generic;
    out.equimultiple = orders.at_zero == orders.at_generic;
    return out;
}

long image_multiplicity(const SpaceBranchParam& c) {
    long g = 0;
    std::optional<long> min_order;
    for (const Polynomial* p : {&c.c1, &c.c2, &c.c3}) {
        if (p->is_zero()) continue;
        for (const auto& [m, coef] : p->terms()) g = std::gcd(g, static_cast<long>(m[Var::u]));
        long ord = p->order_at_origin().value();
        min_order = min_order ? std::min(*min_order, ord) : ord;
    }
    return *min_order / g;
}

namespace {

SpaceBranchParam x_axis_image(const Unfolding& F, const Rational& tval) {
    auto section = [&](const Polynomial& p) {
        return p.substitute(Var::x, Rational(0))
            .substitute(Var::t, tval)
            .rename(Var::y, Var::u);
    };
    return SpaceBranchParam(section(F.first()), section(F.second()),
                            section(F.third()));
}

// drop of the x-axis branch image multiplicity between t = 0 and generic t
long x_axis_image_drop(const Unfolding& F) {
    long base = image_multiplicity(x_axis_image(F, Rational(0)));
    long gen1 = image_multiplicity(x_axis_image(F, Rational(1)));
    long gen2 = image_multiplicity(x_axis_image(F, Rational(2)));
    if (gen1 != gen2)
        fail(ErrorCode::TruncationTooSmall,
             "x-axis image multiplicity disagrees between t = 1 and t = 2");
    return base - gen1;
}

} // namespace

UnfoldingVerdict whitney_verdict(const Unfolding& F) {
    auto type = detect_qh_type(F.base());
    if (!type)
        fail(ErrorCode::NotQuasihomogeneous,
             "whitney verdict needs a quasihomogeneous base");
    if (!is_finitely_determined(F.base()))
        fail(ErrorCode::PreconditionViolated, "base germ is not finitely determined");

    UnfoldingVerdict v;
    v.non_negative_degree = is_non_negative_degree(F, *type);
    TrivialityResult tr = is_topologically_trivial(F);
    v.topologically_trivial = tr.trivial;
    v.triviality_tag = tr.tag;
    EquimultiplicityResult eq = is_equimultiple(F);
    v.equimultiple = eq.equimultiple;
    v.multiplicity_base = eq.multiplicity_base;
    v.multiplicity_deformed = eq.multiplicity_deformed;

    std::optional<SliceData> slice;
    try {
        slice = slice_exponents(F.base(), *type);
        v.slice_mu_base = slice->mu;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::UnhandledCase) throw;
    }

    if (F.is_trivial()) {
        v.whitney = WhitneyStatus::Equisingular;
        v.whitney_tag = "constant family";
        v.slice_mu_deformed = v.slice_mu_base;
        return v;
    }
    if (!v.topologically_trivial) {
        v.whitney = WhitneyStatus::NotApplicable;
        v.whitney_tag =
            "not topologically trivial, so Whitney equisingularity is excluded "
            "(it would force triviality by the isotopy lemma)";
        return v;
    }
    if (!slice) {
        v.whitney = WhitneyStatus::Unknown;
        v.whitney_tag = "slice exponents fall outside the supported cases";
        return v;
    }
    const SliceData& sd = *slice;
    if (sd.exponents == minimal_char_exponents(sd.exponents.multiplicity(),
                                               sd.exponents.count())) {
        v.whitney = WhitneyStatus::Equisingular;
        v.whitney_tag =
            "minimal transverse slice: both the double-point and slice Milnor "
            "numbers stay constant in a topologically trivial family";
        v.slice_mu_deformed = sd.mu;
        return v;
    }
    if (sd.exponents.count() == 3 && F.delta2().is_zero() && F.delta3().is_zero() &&
        std::gcd(type->m(), type->n()) == 2) {
        long drop = x_axis_image_drop(F);
        if (drop > 0) {
            v.whitney = WhitneyStatus::NotEquisingular;
            v.whitney_tag =
                "the x-axis branch of the double point curve loses image "
                "multiplicity, so the slice Milnor number drops";
            v.slice_mu_deformed = sd.mu - 2 * drop;
            return v;
        }
        if (drop < 0) {
            // a multiplicity jump of one branch says the image-multiplicity
            // bookkeeping does not apply; leave the verdict open
            v.whitney = WhitneyStatus::Unknown;
            v.whitney_tag = "x-axis image multiplicity increases: the "
                            "component-wise accounting does not apply";
            return v;
        }
    }
    v.whitney = WhitneyStatus::Unknown;
    v.whitney_tag = "no applicable criterion";
    return v;
}

CounterexampleResult counterexample_unfolding(const CorankOneGerm& f,
                                              const QhType& type) {
    SliceData sd = slice_exponents(f, type);
    if (sd.exponents.count() != 3)
        fail(ErrorCode::HypothesisFailed,
             "construction needs a three-exponent transverse slice");
    if (!(type.w1 < type.d2 - 1))
        fail(ErrorCode::HypothesisFailed, "construction needs w1 < d2 - 1");
    const long m = type.m();
    Polynomial delta1 = Polynomial::term(
        Rational(1),
        Monomial::power(Var::t, 1) * Monomial::power(Var::y, static_cast<int>(m) - 2));
    Unfolding F(f, delta1, Polynomial(), Polynomial());
    long drop = x_axis_image_drop(F);
    CounterexampleResult out{std::move(F), sd.mu, sd.mu - 2 * drop};
    return out;
}

} // namespace mufold
