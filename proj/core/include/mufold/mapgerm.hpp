#pragma once

#include <optional>
#include <string>

#include "mufold/milnor.hpp"
#include "mufold/polynomial.hpp"
#include "mufold/puiseux.hpp"

namespace mufold {

// Corank-1 map germ (x, y) -> (x, p(x,y), q(x,y)) with p, q of order >= 2
// and p(0,y), q(0,y) not both zero.
class CorankOneGerm {
public:
    CorankOneGerm(Polynomial p, Polynomial q);

    const Polynomial& p() const { return p_; }
    const Polynomial& q() const { return q_; }

    std::string str() const; // "(x, y^2, x*y)"

private:
    Polynomial p_, q_;
};

// Weighted-homogeneous type (d1, d2, d3; w1, w2) with d1 = w1, d2 <= d3 and
// coprime weights. m = d2/w2 and n = d3/w2 are the pure y-powers of the
// normal form, so both quotients are required to be integers.
struct QhType {
    long d1, d2, d3;
    long w1, w2;

    long m() const { return d2 / w2; }
    long n() const { return d3 / w2; }
    std::string str() const; // "(1,2,2;1,1)"
};

// which of the three slice-exponent formulas produced the data
enum class SliceCase {
    CoprimeOrders,     // w1 <= d2, gcd(m,n) = 1: exponents m, n
    WeightAboveDegree, // w1 >  d2: exponents m, ((d3-w2)m+w1)/w1
    EvenGcd,           // w1 <= d2, gcd(m,n) = 2: exponents from d2, d3, d2+d3-w1
};

const char* slice_case_name(SliceCase c);

struct SliceData {
    CharExponents exponents;
    MilnorNumber mu = 0;
    SliceCase case_tag = SliceCase::CoprimeOrders;
};

// Searches coprime weights up to the maximum total degree making p and q
// weighted-homogeneous, smallest first. Types whose weighted degrees are not
// multiples of w2 (no pure y-power can exist) are rejected.
std::optional<QhType> detect_qh_type(const CorankOneGerm& f);

// divided differences (p(x,y)-p(x,z))/(y-z) and (q(x,y)-q(x,z))/(y-z);
// on the diagonal z = y they restrict to the y-partials
std::pair<Polynomial, Polynomial> divided_differences(const CorankOneGerm& f);

// defining equation of the double point curve: Res_z of the divided
// differences, content-stripped and sign-normalized. IdenticallyZero when
// the resultant vanishes (the germ is not generically one-to-one).
Polynomial double_point_curve(const CorankOneGerm& f);

// weights (and weighted degree) of a plane curve equation, solved exactly
// from the support; nullopt when no positive weight vector fits
struct CurveWeights {
    long degree;
    long w1, w2;
};
std::optional<CurveWeights> detect_curve_weights(const Polynomial& h);

// finite determinacy via the double point curve: D(f) reduced with an
// isolated singularity at the origin. Certified through the weighted Milnor
// formula when D(f) is weighted-homogeneous, else through the oracle.
bool is_finitely_determined(const CorankOneGerm& f);
// same check against an already-computed double point curve
bool is_finitely_determined(const CorankOneGerm& f, const Polynomial& dpc);

// characteristic exponents and Milnor number of the transverse slice, from
// the case formulas for quasihomogeneous corank-1 germs. UnhandledCase for
// gcd(m,n) >= 3 and for w1 > d2 with gcd(m,n) != 1.
SliceData slice_exponents(const CorankOneGerm& f, const QhType& type);

bool is_slice_minimal(const CorankOneGerm& f, const QhType& type);

// local intersection number of the y-partials of p and q: the number of
// cross-caps of a stable perturbation. InfiniteCrossCaps when the partials
// share a factor.
long cross_cap_count(const CorankOneGerm& f);

} // namespace mufold
