#include "mufold/polynomial.hpp"

namespace mufold {

Polynomial solve_first_component(const Polynomial& f1, int truncation_order) {
    const int N = truncation_order;
    Monomial xm = Monomial::power(Var::x, 1);
    Rational c = 0;
    if (auto it = f1.terms().find(xm); it != f1.terms().end()) c = it->second;
    if (c == 0)
        fail(ErrorCode::NotSolvable,
             "first component has no linear x part");
    if (f1.constant_value() != 0)
        fail(ErrorCode::NotSolvable, "first component does not vanish at the origin");

    // f1/c = x - g with g raising the order under substitution
    Polynomial g = Polynomial::variable(Var::x) - f1 * (Rational(1) / c);

    Polynomial xi;
    for (int iter = 0; iter <= N + 1; ++iter) {
        Polynomial next = g.substitute_truncated(Var::x, xi, N);
        if (next == xi) break;
        xi = next;
    }
    if (xi.uses(Var::x))
        fail(ErrorCode::NotSolvable, "fixed point still involves x");

    Polynomial residual = f1.substitute_truncated(Var::x, xi, N);
    if (!(residual.order_at_origin() > N))
        fail(ErrorCode::TruncationTooSmall,
             "residual order did not exceed the truncation bound");
    return xi;
}

} // namespace mufold
