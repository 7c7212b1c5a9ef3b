#pragma once

#include "mufold/polynomial.hpp"
#include "mufold/puiseux.hpp"

namespace mufold {

// non-negative by construction
using MilnorNumber = long;

struct IntersectionNumber {
    long value = 0;
    bool infinite = false; // the two parametrizations cover the same branch

    bool operator==(const IntersectionNumber& o) const {
        return value == o.value && infinite == o.infinite;
    }
};

// mu = sum (b_{i-1} - b_i)(e_i - 1); zero for a smooth branch
MilnorNumber milnor_from_exponents(const CharExponents& ce);

// Milnor number of the mu-minimal class with multiplicity m and k exponents:
// m(m-1) for k = 2, m(m-2+d1) for k = 3, and the nested-divisor sum
// m(m-2+d1) + sum_{j=1}^{k-3} d_j (d_{j+1} - 1) beyond that.
MilnorNumber milnor_minimal_closed_form(long m, int k);

// Defining equation of the branch: the resultant of x - v^m and y - phi(v)
// with respect to v, computed as the characteristic polynomial of the
// multiplication-by-phi matrix on Q[x][v]/(v^m - x), then stripped of
// integer content and sign.
Polynomial implicitize(const PuiseuxBranch& b);

// order in u of h_b(u^{m_a}, y_a(u)); infinite when the branches coincide
IntersectionNumber intersection_multiplicity(const PuiseuxBranch& a,
                                             const PuiseuxBranch& b);

// 1 + sum (mu_i - 1) + 2 sum_{i<j} i(X^i, X^j); throws SharedBranch when a
// pair of parametrizations covers the same branch
MilnorNumber milnor_multibranch(const PlaneCurveGerm& g);

// Independent oracle: mu at the origin as the x-order of
// Res_y(dh/dx, dh/dy) after a shear x -> x + lambda*y, accepted once two
// consecutive shears agree. Requires h(0,0) = 0, h squarefree with an
// isolated singular point at the origin.
MilnorNumber milnor_implicit_oracle(const Polynomial& h);

// local intersection number of two plane curves at the origin, same sheared
// resultant engine as the oracle
MilnorNumber sheared_intersection_number(const Polynomial& a, const Polynomial& b);

// (d - w1)(d - w2) / (w1 w2) for a weighted-homogeneous curve with an
// isolated singularity; NonInteger when the division fails
MilnorNumber milnor_quasihomogeneous_curve(long d, long w1, long w2);

} // namespace mufold
