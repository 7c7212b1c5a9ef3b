#include "mufold/mapgerm.hpp"

#include <numeric>
#include <sstream>

#include "mufold/normalform.hpp"
#include "mufold/zpoly.hpp"

namespace mufold {

namespace {

bool in_xy_only(const Polynomial& p) {
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (v == Var::x || v == Var::y) continue;
        if (p.uses(v)) return false;
    }
    return true;
}

} // namespace

CorankOneGerm::CorankOneGerm(Polynomial p, Polynomial q)
    : p_(std::move(p)), q_(std::move(q)) {
    if (!in_xy_only(p_) || !in_xy_only(q_))
        fail(ErrorCode::PreconditionViolated,
             "germ coordinates must be polynomials in x and y");
    if (!(p_.order_at_origin() >= 2) || !(q_.order_at_origin() >= 2))
        fail(ErrorCode::PreconditionViolated,
             "p and q must vanish to order >= 2 at the origin");
    Polynomial p0 = p_.substitute(Var::x, Rational(0));
    Polynomial q0 = q_.substitute(Var::x, Rational(0));
    if (p0.is_zero() && q0.is_zero())
        fail(ErrorCode::PreconditionViolated,
             "p(0,y) and q(0,y) vanish simultaneously: the germ is not finite");
}

std::string CorankOneGerm::str() const {
    return "(x, " + p_.str() + ", " + q_.str() + ")";
}

std::string QhType::str() const {
    std::ostringstream os;
    os << '(' << d1 << ',' << d2 << ',' << d3 << ';' << w1 << ',' << w2 << ')';
    return os.str();
}

const char* slice_case_name(SliceCase c) {
    switch (c) {
        case SliceCase::CoprimeOrders: return "coprime-orders";
        case SliceCase::WeightAboveDegree: return "weight-above-degree";
        case SliceCase::EvenGcd: return "even-gcd";
    }
    return "?";
}

std::optional<QhType> detect_qh_type(const CorankOneGerm& f) {
    long bound = std::max(f.p().total_degree(), f.q().total_degree());
    if (bound < 1) return std::nullopt;
    for (long s = 2; s <= 2 * bound; ++s) {
        for (long w1 = 1; w1 < s; ++w1) {
            long w2 = s - w1;
            if (w1 > bound || w2 > bound) continue;
            if (std::gcd(w1, w2) != 1) continue;
            std::array<long, kNumVars> w{};
            w[static_cast<int>(Var::x)] = w1;
            w[static_cast<int>(Var::y)] = w2;
            auto dp = f.p().weighted_homogeneous_degree(w);
            auto dq = f.q().weighted_homogeneous_degree(w);
            if (!dp || !dq) continue;
            long d2 = std::min(*dp, *dq);
            long d3 = std::max(*dp, *dq);
            // the normal form needs pure y-powers y^(d2/w2), y^(d3/w2)
            if (d2 % w2 != 0 || d3 % w2 != 0) continue;
            return QhType{w1, d2, d3, w1, w2};
        }
    }
    return std::nullopt;
}

std::pair<Polynomial, Polynomial> divided_differences(const CorankOneGerm& f) {
    Polynomial den = Polynomial::variable(Var::y) - Polynomial::variable(Var::z);
    Polynomial phi = exact_divide(f.p() - f.p().rename(Var::y, Var::z), den);
    Polynomial psi = exact_divide(f.q() - f.q().rename(Var::y, Var::z), den);
    return {phi, psi};
}

Polynomial double_point_curve(const CorankOneGerm& f) {
    auto [phi, psi] = divided_differences(f);
    Polynomial res;
    if (auto type = detect_qh_type(f)) {
        std::array<long, kNumVars> w{};
        w[static_cast<int>(Var::x)] = type->w1;
        w[static_cast<int>(Var::y)] = type->w2;
        w[static_cast<int>(Var::z)] = type->w2;
        res = resultant_weighted(phi, psi, Var::z, w);
    } else {
        res = resultant(phi, psi, Var::z);
    }
    if (res.is_zero())
        fail(ErrorCode::IdenticallyZero,
             "double point resultant vanishes: not generically one-to-one");
    return res.primitive_part();
}

std::optional<CurveWeights> detect_curve_weights(const Polynomial& h) {
    if (h.is_zero() || !in_xy_only(h)) return std::nullopt;
    const auto& terms = h.terms();
    auto first = terms.begin()->first;
    long a0 = first[Var::x], b0 = first[Var::y];
    long da = 0, db = 0;
    for (const auto& [m, c] : terms) {
        da = m[Var::x] - a0;
        db = m[Var::y] - b0;
        if (da != 0 || db != 0) break;
    }
    long w1 = 1, w2 = 1;
    if (da != 0 || db != 0) {
        if (da == 0 || db == 0 || (da > 0) == (db > 0)) return std::nullopt;
        long g = std::gcd(std::abs(da), std::abs(db));
        w1 = std::abs(db) / g;
        w2 = std::abs(da) / g;
    }
    long degree = w1 * a0 + w2 * b0;
    for (const auto& [m, c] : terms)
        if (w1 * m[Var::x] + w2 * m[Var::y] != degree) return std::nullopt;
    return CurveWeights{degree, w1, w2};
}

namespace {

// dehomogenized copy of a weighted-homogeneous curve along its heavier
// variable; valid because no two monomials share an exponent of that variable
ZPoly dehomogenize_curve(const Polynomial& e, const CurveWeights& cw) {
    Var keep = (cw.w1 >= cw.w2) ? Var::x : Var::y;
    Polynomial integral = e.primitive_part();
    std::vector<Integer> coeffs(static_cast<std::size_t>(integral.degree_in(keep)) + 1,
                                Integer(0));
    for (const auto& [m, c] : integral.terms())
        coeffs[m[keep]] = numerator(c);
    return ZPoly(std::move(coeffs));
}

} // namespace

bool is_finitely_determined(const CorankOneGerm& f) {
    Polynomial d;
    try {
        d = double_point_curve(f);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IdenticallyZero) return false;
        throw;
    }
    return is_finitely_determined(f, d);
}

bool is_finitely_determined(const CorankOneGerm&, const Polynomial& dpc) {
    const Polynomial& d = dpc;
    if (d.is_zero()) return false;
    if (d.is_constant()) return false; // empty double locus: degenerate
    if (d.constant_value() != 0) return false; // misses the origin

    if (auto cw = detect_curve_weights(d)) {
        int a = d.degree_in(Var::x), b = d.degree_in(Var::y);
        for (const auto& [m, c] : d.terms()) {
            a = std::min(a, static_cast<int>(m[Var::x]));
            b = std::min(b, static_cast<int>(m[Var::y]));
        }
        if (a >= 2 || b >= 2) return false; // multiple smooth component
        Polynomial mono = Polynomial::term(
            Rational(1), Monomial::power(Var::x, a) * Monomial::power(Var::y, b));
        Polynomial e = exact_divide(d, mono);
        if (!e.is_constant() && !zpoly_squarefree(dehomogenize_curve(e, *cw)))
            return false;
        // weighted Milnor number certifies the isolated singularity
        try {
            milnor_quasihomogeneous_curve(cw->degree, cw->w1, cw->w2);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::NonInteger) return false;
            throw;
        }
        return true;
    }

    try {
        milnor_implicit_oracle(d);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonIsolated) return false;
        throw;
    }
    return true;
}

SliceData slice_exponents(const CorankOneGerm& f, const QhType& type) {
    if (type.w2 < 1 || type.w1 < 1 || std::gcd(type.w1, type.w2) != 1 ||
        type.d2 > type.d3 || type.d1 != type.w1)
        fail(ErrorCode::PreconditionViolated, "malformed quasihomogeneous type");
    if (type.d2 % type.w2 != 0 || type.d3 % type.w2 != 0)
        fail(ErrorCode::UnhandledCase,
             "weighted degrees are not multiples of the y-weight");
    std::array<long, kNumVars> w{};
    w[static_cast<int>(Var::x)] = type.w1;
    w[static_cast<int>(Var::y)] = type.w2;
    auto dp = f.p().weighted_homogeneous_degree(w);
    auto dq = f.q().weighted_homogeneous_degree(w);
    if (!dp || !dq || std::min(*dp, *dq) != type.d2 || std::max(*dp, *dq) != type.d3)
        fail(ErrorCode::PreconditionViolated,
             "germ does not match the quasihomogeneous type");
    const long m = type.m();
    const long n = type.n();
    if (m < 2)
        fail(ErrorCode::UnhandledCase, "slice formulas need multiplicity >= 2");
    const long g = std::gcd(m, n);

    SliceData out;
    try {
        if (type.w1 > type.d2) {
            if (g != 1)
                fail(ErrorCode::UnhandledCase,
                     "no formula for w1 > d2 with gcd(m,n) != 1");
            long num = (type.d3 - type.w2) * m + type.w1;
            if (num % type.w1 != 0)
                fail(ErrorCode::UnhandledCase, "slice exponent is not integral");
            out.case_tag = SliceCase::WeightAboveDegree;
            out.exponents = characteristic_exponents(
                PuiseuxBranch(m, {{num / type.w1, Rational(1)}}));
        } else if (g == 1) {
            out.case_tag = SliceCase::CoprimeOrders;
            out.exponents =
                characteristic_exponents(PuiseuxBranch(m, {{n, Rational(1)}}));
        } else if (g == 2) {
            if (type.w2 != 1)
                fail(ErrorCode::UnhandledCase,
                     "even-gcd case expects y-weight 1");
            out.case_tag = SliceCase::EvenGcd;
            std::map<long, Rational> terms;
            terms[type.d3] += 1;
            terms[type.d2 + type.d3 - type.w1] += 1;
            out.exponents =
                characteristic_exponents(PuiseuxBranch(type.d2, std::move(terms)));
        } else {
            fail(ErrorCode::UnhandledCase, "no formula for gcd(m,n) >= 3");
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotPrimitive)
            fail(ErrorCode::UnhandledCase,
                 "slice formula produced a non-primitive parametrization");
        throw;
    }
    out.mu = milnor_from_exponents(out.exponents);
    if (out.exponents.count() < 2 || out.exponents.count() > 3)
        fail(ErrorCode::UnhandledCase,
             "slice has an unexpected number of characteristic exponents");
    return out;
}

bool is_slice_minimal(const CorankOneGerm& f, const QhType& type) {
    SliceData sd = slice_exponents(f, type);
    return sd.exponents ==
           minimal_char_exponents(sd.exponents.multiplicity(), sd.exponents.count());
}

long cross_cap_count(const CorankOneGerm& f) {
    Polynomial a = f.p().derivative(Var::y);
    Polynomial b = f.q().derivative(Var::y);
    if (a.is_zero() || b.is_zero() || !polynomial_gcd(a, b).is_constant())
        fail(ErrorCode::InfiniteCrossCaps,
             "y-partials share a factor: the ramification locus is a curve");
    try {
        return sheared_intersection_number(a, b);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonIsolated)
            fail(ErrorCode::InfiniteCrossCaps,
                 "ramification ideal is not zero-dimensional");
        throw;
    }
}

} // namespace mufold
