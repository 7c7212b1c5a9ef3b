#include "mufold/milnor.hpp"

#include <numeric>
#include <optional>
#include <utility>

#include "mufold/arith.hpp"

namespace mufold {

MilnorNumber milnor_from_exponents(const CharExponents& ce) {
    MilnorNumber mu = 0;
    for (std::size_t i = 1; i < ce.e.size(); ++i)
        mu += (ce.b[i - 1] - ce.b[i]) * (ce.e[i] - 1);
    return mu;
}

MilnorNumber milnor_minimal_closed_form(long m, int k) {
    if (m < 2) fail(ErrorCode::PreconditionViolated, "closed form needs m >= 2");
    if (k < 2) fail(ErrorCode::KTooSmall, "a singular branch has k >= 2");
    if (k > sigma(m) + 1)
        fail(ErrorCode::KTooLarge, "exponent count exceeds sigma(m)+1");
    if (k == 2) return m * (m - 1);
    DivisorChain chain = minimal_divisor_chain(m, k);
    MilnorNumber mu = m * (m - 2 + chain.at(1));
    for (int j = 1; j <= k - 3; ++j)
        mu += chain.at(j) * (chain.at(j + 1) - 1);
    return mu;
}

Polynomial implicitize(const PuiseuxBranch& b) {
    const long m = b.multiplicity();
    // multiplication-by-phi matrix on the basis 1, v, ..., v^{m-1} with
    // v^m identified with x
    std::vector<std::vector<Polynomial>> c(
        static_cast<std::size_t>(m),
        std::vector<Polynomial>(static_cast<std::size_t>(m)));
    for (const auto& [alpha, coef] : b.y_terms()) {
        for (long j = 0; j < m; ++j) {
            long q = (alpha + j) / m;
            long r = (alpha + j) % m;
            c[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] +=
                Polynomial::term(coef, Monomial::power(Var::x, static_cast<int>(q)));
        }
    }
    // det(y*I - C) by expansion through the same fraction-free elimination
    // used everywhere else
    std::vector<std::vector<Polynomial>> mat = std::move(c);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            Polynomial entry = -mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j) entry += Polynomial::variable(Var::y);
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry;
        }
    }
    // Bareiss determinant on the m x m matrix
    int sign = 1;
    Polynomial prev(1);
    const std::size_t n = static_cast<std::size_t>(m);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && mat[r][k].is_zero()) ++r;
            if (r == n) return Polynomial();
            std::swap(mat[k], mat[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
                mat[i][j] = exact_divide(num, prev);
            }
            mat[i][k] = Polynomial();
        }
        prev = mat[k][k];
    }
    Polynomial det = mat[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det.primitive_part();
}

IntersectionNumber intersection_multiplicity(const PuiseuxBranch& a,
                                             const PuiseuxBranch& b) {
    if (a == b)
        fail(ErrorCode::SharedBranch, "equal parametrizations");
    Polynomial h = implicitize(b);
    Polynomial xa = Polynomial::variable(Var::u, static_cast<int>(a.multiplicity()));
    Polynomial ya;
    for (const auto& [alpha, coef] : a.y_terms())
        ya += Polynomial::term(coef, Monomial::power(Var::u, static_cast<int>(alpha)));
    Polynomial s = h.substitute(Var::x, xa).substitute(Var::y, ya);
    IntersectionNumber out;
    if (s.is_zero()) {
        out.infinite = true;
        return out;
    }
    out.value = s.order_at_origin().value();
    return out;
}

MilnorNumber milnor_multibranch(const PlaneCurveGerm& g) {
    const auto& branches = g.branches();
    if (branches.size() == 1)
        return milnor_from_exponents(characteristic_exponents(branches[0]));
    MilnorNumber mu = 1;
    for (const auto& b : branches)
        mu += milnor_from_exponents(characteristic_exponents(b)) - 1;
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            IntersectionNumber in = intersection_multiplicity(branches[i], branches[j]);
            if (in.infinite)
                fail(ErrorCode::SharedBranch,
                     "two parametrizations cover the same branch");
            mu += 2 * in.value;
        }
    return mu;
}

namespace {

constexpr int kMaxShear = 8;

Polynomial shear_x(const Polynomial& p, int lambda) {
    Polynomial image =
        Polynomial::variable(Var::x) + Polynomial::variable(Var::y) * Rational(lambda);
    return p.substitute(Var::x, image);
}

// x-order of Res_y of a pair depending on the shear parameter, accepted once
// two consecutive shears agree
template <typename PairFn>
MilnorNumber sheared_order_sweep(PairFn make_pair) {
    std::optional<long> prev;
    bool any_nonzero = false;
    for (int lambda = 1; lambda <= kMaxShear; ++lambda) {
        auto [as, bs] = make_pair(lambda);
        if ((as.is_constant() && !as.is_zero()) ||
            (bs.is_constant() && !bs.is_zero()))
            return 0; // unit ideal
        if (as.is_zero() || bs.is_zero()) continue;
        Polynomial r = resultant(as, bs, Var::y);
        if (r.is_zero()) continue;
        any_nonzero = true;
        long ord = r.order_at_origin().value();
        if (prev && *prev == ord) return ord;
        prev = ord;
    }
    if (!any_nonzero)
        fail(ErrorCode::NonIsolated,
             "resultant of the pair vanishes for every shear");
    fail(ErrorCode::NoConvergence, "shear sweep did not stabilize");
}

} // namespace

MilnorNumber milnor_implicit_oracle(const Polynomial& h) {
    if (h.is_zero())
        fail(ErrorCode::PreconditionViolated, "oracle needs a nonzero equation");
    if (h.constant_value() != 0)
        fail(ErrorCode::PreconditionViolated, "curve must pass through the origin");
    return sheared_order_sweep([&](int lambda) {
        Polynomial sheared = shear_x(h, lambda);
        return std::make_pair(sheared.derivative(Var::x), sheared.derivative(Var::y));
    });
}

MilnorNumber sheared_intersection_number(const Polynomial& a, const Polynomial& b) {
    return sheared_order_sweep([&](int lambda) {
        return std::make_pair(shear_x(a, lambda), shear_x(b, lambda));
    });
}

MilnorNumber milnor_quasihomogeneous_curve(long d, long w1, long w2) {
    if (w1 < 1 || w2 < 1)
        fail(ErrorCode::PreconditionViolated, "weights must be positive");
    if (std::gcd(w1, w2) != 1)
        fail(ErrorCode::PreconditionViolated, "weights must be coprime");
    long num = (d - w1) * (d - w2);
    if (num < 0 || num % (w1 * w2) != 0)
        fail(ErrorCode::NonInteger,
             "(d-w1)(d-w2)/(w1*w2) is not a non-negative integer");
    return num / (w1 * w2);
}

} // namespace mufold
