#pragma once

#include <vector>

#include "mufold/milnor.hpp"
#include "mufold/puiseux.hpp"

namespace mufold {

// Per-branch multiplicities and exponent counts describing a topological
// class of plane curve germs. k_i = 1 exactly when m_i = 1 (smooth branch).
struct MinimalitySpec {
    std::vector<long> m_vec;
    std::vector<int> k_vec;

    MinimalitySpec(std::vector<long> m, std::vector<int> k);
    int branch_count() const { return static_cast<int>(m_vec.size()); }
};

// One-parameter deformation: the base curve plus per-branch terms that all
// carry the deformation parameter. Specializing the parameter to 0 returns
// the base.
struct DeformationFamily {
    PlaneCurveGerm base;
    // added_terms[i]: exponent -> coefficient of t * u^exponent on branch i
    std::vector<std::map<long, Rational>> added_terms;

    bool is_trivial() const;
    PlaneCurveGerm specialize(const Rational& t) const;
    std::string str() const; // "(u^4, u^6+u^9+t*u^7)"
};

// Branch with the least Milnor number among multiplicity-m branches with k
// characteristic exponents: y-exponents m+d1, m+d1+d2, ..., and a final
// exponent one above the previous, all coefficients 1. (u, 0) for m = k = 1,
// (u^m, u^{m+1}) for k = 2.
PuiseuxBranch minimal_normal_form(long m, int k);

CharExponents minimal_char_exponents(long m, int k);

// true iff the branch's characteristic exponents match the minimal ones for
// its own multiplicity and exponent count
bool is_minimal_branch(const PuiseuxBranch& b);

// every branch minimal and all pairs transversal (intersection number equal
// to the product of multiplicities)
bool is_minimal_germ(const PlaneCurveGerm& g);

// branch i is minimal_normal_form(m_i, k_i) plus the tangent term
// (i-1) * u^{m_i}, so distinct branches get distinct tangents
PlaneCurveGerm minimal_normal_form_germ(const MinimalitySpec& spec);

// adds t*u^a for every minimal characteristic exponent the branch is
// missing; the t != 0 members are minimal with the same m and k. Returns the
// identity family when the branch is already minimal.
DeformationFamily deform_to_minimal(const PuiseuxBranch& b);

} // namespace mufold
