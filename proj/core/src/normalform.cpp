#include "mufold/normalform.hpp"

#include <sstream>

#include "mufold/arith.hpp"

namespace mufold {

MinimalitySpec::MinimalitySpec(std::vector<long> m, std::vector<int> k)
    : m_vec(std::move(m)), k_vec(std::move(k)) {
    if (m_vec.empty() || m_vec.size() != k_vec.size())
        fail(ErrorCode::PreconditionViolated,
             "multiplicities and exponent counts must pair up");
    for (std::size_t i = 0; i < m_vec.size(); ++i) {
        if (m_vec[i] == 1) {
            if (k_vec[i] != 1)
                fail(ErrorCode::PreconditionViolated,
                     "a smooth branch has exactly one characteristic exponent");
        } else if (k_vec[i] < 2) {
            fail(ErrorCode::KTooSmall, "a singular branch has k >= 2");
        } else if (k_vec[i] > sigma(m_vec[i]) + 1) {
            fail(ErrorCode::KTooLarge, "exponent count exceeds sigma(m)+1");
        }
    }
}

bool DeformationFamily::is_trivial() const {
    for (const auto& terms : added_terms)
        if (!terms.empty()) return false;
    return true;
}

PlaneCurveGerm DeformationFamily::specialize(const Rational& t) const {
    std::vector<PuiseuxBranch> branches;
    for (std::size_t i = 0; i < base.branches().size(); ++i) {
        auto terms = base.branches()[i].y_terms();
        for (const auto& [a, c] : added_terms[i]) {
            terms[a] += c * t;
            if (terms[a] == 0) terms.erase(a);
        }
        branches.emplace_back(base.branches()[i].multiplicity(), std::move(terms));
    }
    return PlaneCurveGerm(std::move(branches));
}

std::string DeformationFamily::str() const {
    std::ostringstream os;
    bool multi = base.branches().size() > 1;
    if (multi) os << '{';
    for (std::size_t i = 0; i < base.branches().size(); ++i) {
        if (i) os << ", ";
        const PuiseuxBranch& b = base.branches()[i];
        std::string s = b.str();
        s.pop_back(); // strip ")"
        os << s;
        for (const auto& [a, c] : added_terms[i]) {
            Rational coef = c;
            os << (coef < 0 ? '-' : '+');
            if (coef < 0) coef = -coef;
            if (coef != 1) os << to_string(coef) << '*';
            os << "t*u";
            if (a > 1) os << '^' << a;
        }
        os << ')';
    }
    if (multi) os << '}';
    return os.str();
}

PuiseuxBranch minimal_normal_form(long m, int k) {
    if (m == 1) {
        if (k != 1)
            fail(ErrorCode::PreconditionViolated,
                 "a smooth branch has exactly one characteristic exponent");
        return PuiseuxBranch::smooth();
    }
    if (k < 2) fail(ErrorCode::KTooSmall, "a singular branch has k >= 2");
    if (k >= 3 && sigma(m) == 1)
        fail(ErrorCode::PrimeNeedsK2,
             "prime multiplicity admits exactly two characteristic exponents");
    if (k > sigma(m) + 1)
        fail(ErrorCode::KTooLarge, "exponent count exceeds sigma(m)+1");
    std::map<long, Rational> terms;
    if (k == 2) {
        terms[m + 1] = 1;
    } else {
        DivisorChain chain = minimal_divisor_chain(m, k);
        long e = m;
        for (int i = 1; i <= k - 2; ++i) {
            e += chain.at(i);
            terms[e] = 1;
        }
        terms[e + 1] = 1;
    }
    return PuiseuxBranch(m, std::move(terms));
}

CharExponents minimal_char_exponents(long m, int k) {
    return characteristic_exponents(minimal_normal_form(m, k));
}

bool is_minimal_branch(const PuiseuxBranch& b) {
    CharExponents ce = characteristic_exponents(b);
    return ce == minimal_char_exponents(b.multiplicity(), ce.count());
}

bool is_minimal_germ(const PlaneCurveGerm& g) {
    for (const auto& b : g.branches())
        if (!is_minimal_branch(b)) return false;
    const auto& branches = g.branches();
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            IntersectionNumber in = intersection_multiplicity(branches[i], branches[j]);
            if (in.infinite)
                fail(ErrorCode::SharedBranch,
                     "two parametrizations cover the same branch");
            if (in.value != branches[i].multiplicity() * branches[j].multiplicity())
                return false; // a shared tangent
        }
    return true;
}

PlaneCurveGerm minimal_normal_form_germ(const MinimalitySpec& spec) {
    std::vector<PuiseuxBranch> branches;
    for (int i = 0; i < spec.branch_count(); ++i) {
        PuiseuxBranch b = minimal_normal_form(spec.m_vec[static_cast<std::size_t>(i)],
                                              spec.k_vec[static_cast<std::size_t>(i)]);
        auto terms = b.y_terms();
        if (i > 0) terms[b.multiplicity()] += Rational(i);
        branches.emplace_back(b.multiplicity(), std::move(terms));
    }
    return PlaneCurveGerm(std::move(branches));
}

DeformationFamily deform_to_minimal(const PuiseuxBranch& b) {
    if (b.multiplicity() < 2)
        fail(ErrorCode::PreconditionViolated,
             "deformation to a minimal form needs a singular branch");
    CharExponents ce = characteristic_exponents(b);
    CharExponents target = minimal_char_exponents(b.multiplicity(), ce.count());
    std::map<long, Rational> added;
    for (std::size_t i = 1; i < target.e.size(); ++i) {
        long a = target.e[i];
        bool present = false;
        for (std::size_t j = 1; j < ce.e.size(); ++j)
            if (ce.e[j] == a) present = true;
        if (!present) added[a] = 1;
    }
    DeformationFamily family{PlaneCurveGerm({b}), {std::move(added)}};
    return family;
}

} // namespace mufold
