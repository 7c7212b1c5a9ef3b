#include "mufold/puiseux.hpp"

#include <numeric>
#include <sstream>

namespace mufold {

std::string CharExponents::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

PuiseuxBranch::PuiseuxBranch(long m, std::map<long, Rational> y_terms)
    : m_(m), y_terms_(std::move(y_terms)) {
    if (m_ < 1) fail(ErrorCode::PreconditionViolated, "multiplicity must be >= 1");
    for (auto it = y_terms_.begin(); it != y_terms_.end();) {
        if (it->second == 0) {
            it = y_terms_.erase(it);
            continue;
        }
        if (it->first < m_)
            fail(ErrorCode::PreconditionViolated,
                 "y-exponent below the multiplicity: not in generic coordinates");
        ++it;
    }
    long g = m_;
    for (const auto& [a, c] : y_terms_) g = std::gcd(g, a);
    if (g != 1)
        fail(ErrorCode::NotPrimitive,
             "parametrization is a degree-" + std::to_string(g) +
                 " cover of its image");
}

PuiseuxBranch PuiseuxBranch::rescale(const Rational& scale) const {
    if (scale == 0) fail(ErrorCode::PreconditionViolated, "rescale by zero");
    std::map<long, Rational> terms;
    Rational s(1);
    long prev = 0;
    for (const auto& [a, c] : y_terms_) {
        for (long i = prev; i < a; ++i) s *= scale;
        prev = a;
        terms[a] = c * s;
    }
    // the first coordinate becomes scale^m * u^m; renormalizing it back to
    // u^m is a coordinate change that leaves the exponent set alone, so the
    // rescaled branch keeps the raw y-exponents
    return PuiseuxBranch(m_, std::move(terms));
}

std::string PuiseuxBranch::str() const {
    std::ostringstream os;
    os << "(u";
    if (m_ > 1) os << '^' << m_;
    os << ", ";
    if (y_terms_.empty()) {
        os << '0';
    } else {
        bool first = true;
        for (const auto& [a, c] : y_terms_) {
            Rational coef = c;
            if (!first) {
                os << (coef < 0 ? "-" : "+");
                if (coef < 0) coef = -coef;
            } else if (coef < 0) {
                os << '-';
                coef = -coef;
            }
            if (coef != 1) os << to_string(coef) << '*';
            os << 'u';
            if (a > 1) os << '^' << a;
            first = false;
        }
    }
    os << ')';
    return os.str();
}

PlaneCurveGerm::PlaneCurveGerm(std::vector<PuiseuxBranch> branches)
    : branches_(std::move(branches)) {
    if (branches_.empty())
        fail(ErrorCode::PreconditionViolated, "a curve germ needs a branch");
    for (std::size_t i = 0; i < branches_.size(); ++i)
        for (std::size_t j = i + 1; j < branches_.size(); ++j)
            if (branches_[i] == branches_[j])
                fail(ErrorCode::PreconditionViolated,
                     "branches must be pairwise distinct parametrizations");
}

std::string PlaneCurveGerm::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) os << ", ";
        os << branches_[i].str();
    }
    os << '}';
    return os.str();
}

CharExponents characteristic_exponents(const PuiseuxBranch& branch) {
    CharExponents ce;
    long g = branch.multiplicity();
    ce.e.push_back(g);
    ce.b.push_back(g);
    for (const auto& [a, c] : branch.y_terms()) {
        if (g == 1) break;
        long g2 = std::gcd(g, a);
        if (g2 < g) {
            ce.e.push_back(a);
            ce.b.push_back(g2);
            g = g2;
        }
    }
    if (g != 1)
        fail(ErrorCode::NotPrimitive, "running gcd did not reach 1");
    return ce;
}

int count_exponents(const PuiseuxBranch& b) {
    return characteristic_exponents(b).count();
}

long multiplicity(const PuiseuxBranch& b) { return b.multiplicity(); }

long multiplicity(const PlaneCurveGerm& g) {
    long m = 0;
    for (const auto& b : g.branches()) m += b.multiplicity();
    return m;
}

} // namespace mufold
