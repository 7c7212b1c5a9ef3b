#pragma once

#include <optional>
#include <string>
#include <utility>

#include "mufold/mapgerm.hpp"

namespace mufold {

// One-parameter unfolding F = (f_t, t) of a corank-1 germ: coordinates
// (x + d1, p + d2, q + d3) with each delta vanishing at t = 0 and at the
// origin of every fiber.
class Unfolding {
public:
    Unfolding(CorankOneGerm base, Polynomial delta1, Polynomial delta2,
              Polynomial delta3);

    const CorankOneGerm& base() const { return base_; }
    const Polynomial& delta1() const { return delta1_; }
    const Polynomial& delta2() const { return delta2_; }
    const Polynomial& delta3() const { return delta3_; }

    Polynomial first() const;  // x + delta1
    Polynomial second() const; // p + delta2
    Polynomial third() const;  // q + delta3

    bool is_trivial() const;

    std::string str() const;

private:
    CorankOneGerm base_;
    Polynomial delta1_, delta2_, delta3_;
};

enum class WhitneyStatus { Equisingular, NotEquisingular, Unknown, NotApplicable };

const char* whitney_status_name(WhitneyStatus s);

struct UnfoldingVerdict {
    bool non_negative_degree = false;
    bool topologically_trivial = false;
    std::string triviality_tag;
    bool equimultiple = false;
    long multiplicity_base = 0;
    long multiplicity_deformed = 0;
    WhitneyStatus whitney = WhitneyStatus::Unknown;
    std::string whitney_tag;
    std::optional<long> slice_mu_base;     // mu(gamma_0) when the slice data exists
    std::optional<long> slice_mu_deformed; // mu(gamma_t) when determined
};

// a parametrized space curve (three coordinates in u)
struct SpaceBranchParam {
    Polynomial c1, c2, c3;

    SpaceBranchParam(Polynomial a, Polynomial b, Polynomial c);
};

// every monomial added by each delta has weighted (x,y)-degree at least the
// degree of the coordinate it perturbs; the parameter t carries weight 0
bool is_non_negative_degree(const Unfolding& F, const QhType& type);

// For quasihomogeneous corank-1 germs this coincides with non-negative
// degree; the tag names the equivalence. NotQuasihomogeneous when no type
// exists.
struct TrivialityResult {
    bool trivial = false;
    std::string tag;
};
TrivialityResult is_topologically_trivial(const Unfolding& F);

// multiplicity of the image surface at t = 0 versus a generic parameter
// value (t = 1, re-checked at t = 2), computed by eliminating x from the
// first coordinate and reading y-orders of the remaining two
struct EquimultiplicityResult {
    bool equimultiple = false;
    long multiplicity_base = 0;
    long multiplicity_deformed = 0;
};
EquimultiplicityResult is_equimultiple(const Unfolding& F);

// (minimum u-order over the coordinates) / (gcd of every u-exponent):
// the parametrization may be a multiple cover of its image
long image_multiplicity(const SpaceBranchParam& c);

UnfoldingVerdict whitney_verdict(const Unfolding& F);

// The unfolding (x + t*y^{m-2}, p, q) whose x-axis branch image drops
// multiplicity, together with the predicted slice Milnor pair. Requires a
// three-exponent slice and w1 < d2 - 1.
struct CounterexampleResult {
    Unfolding unfolding;
    long slice_mu_base = 0;
    long slice_mu_deformed = 0;
};
CounterexampleResult counterexample_unfolding(const CorankOneGerm& f,
                                              const QhType& type);

} // namespace mufold
