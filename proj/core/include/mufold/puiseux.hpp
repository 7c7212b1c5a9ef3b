#pragma once

#include <map>
#include <string>
#include <vector>

#include "mufold/rational.hpp"
#include "mufold/errors.hpp"

namespace mufold {

// Characteristic exponents e0 = m < e1 < ... < e_{k-1} together with the
// gcd sequence b_i = gcd(e0, ..., ei). The b-sequence drops strictly at
// every recorded exponent and ends at 1.
struct CharExponents {
    std::vector<long> e;
    std::vector<long> b;

    int count() const { return static_cast<int>(e.size()); }
    long multiplicity() const { return e.front(); }
    bool operator==(const CharExponents& o) const { return e == o.e; }
    std::string str() const;
};

// Finitely supported Puiseux parametrization u -> (u^m, sum c_a u^a) of an
// irreducible plane branch. Kept primitive: a parametrization that is a
// multiple cover of its image is rejected rather than reduced.
class PuiseuxBranch {
public:
    PuiseuxBranch(long m, std::map<long, Rational> y_terms);

    static PuiseuxBranch smooth() { return PuiseuxBranch(1, {}); }

    long multiplicity() const { return m_; }
    const std::map<long, Rational>& y_terms() const { return y_terms_; }

    // y-coordinate as a polynomial in u, with u mapped to `scale * u`
    PuiseuxBranch rescale(const Rational& scale) const;

    bool operator==(const PuiseuxBranch& o) const {
        return m_ == o.m_ && y_terms_ == o.y_terms_;
    }
    bool operator!=(const PuiseuxBranch& o) const { return !(*this == o); }

    std::string str() const; // "(u^4, u^6+u^7)"

private:
    long m_;
    std::map<long, Rational> y_terms_;
};

// Nonempty union of pairwise distinct branches.
class PlaneCurveGerm {
public:
    explicit PlaneCurveGerm(std::vector<PuiseuxBranch> branches);

    const std::vector<PuiseuxBranch>& branches() const { return branches_; }
    int branch_count() const { return static_cast<int>(branches_.size()); }

    std::string str() const; // "{(u^2, u^3), (u^4, u^4+u^6+u^7)}"

private:
    std::vector<PuiseuxBranch> branches_;
};

// Ascending scan over the support: an exponent is characteristic exactly
// when it strictly drops the running gcd. Exponents the current gcd divides
// (the tangent term at exponent m included) are skipped.
CharExponents characteristic_exponents(const PuiseuxBranch& b);

int count_exponents(const PuiseuxBranch& b);

long multiplicity(const PuiseuxBranch& b);
long multiplicity(const PlaneCurveGerm& g);

} // namespace mufold
