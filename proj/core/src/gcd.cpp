#include <algorithm>

#include "mufold/polynomial.hpp"

namespace mufold {

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, in v
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, Var v) {
    Polynomial r = a;
    const int db = b.degree_in(v);
    const Polynomial lb = b.leading_coeff_in(v);
    int e = a.degree_in(v) - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Polynomial s = r.leading_coeff_in(v) * Polynomial::variable(v, dr - db);
        r = r * lb - b * s;
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

Polynomial content_in(const Polynomial& p, Var v) {
    Polynomial c;
    for (const auto& coeff : p.coeffs_in(v)) {
        if (coeff.is_zero()) continue;
        c = polynomial_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

// gcd of the primitive parts by the subresultant remainder sequence,
// contents stripped from the final member
Polynomial subresultant_prs_gcd(Polynomial a, Polynomial b, Var v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    Polynomial g(1), h(1);
    while (true) {
        int delta = a.degree_in(v) - b.degree_in(v);
        Polynomial r = pseudo_rem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return Polynomial(1);
        a = b;
        b = exact_divide(r, g * h.pow(delta));
        g = a.leading_coeff_in(v);
        if (delta > 0) h = exact_divide(g.pow(delta), h.pow(delta - 1));
    }
    return exact_divide(b, content_in(b, v)).primitive_part();
}

} // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Polynomial pa = a.primitive_part();
    Polynomial pb = b.primitive_part();
    if (pa.is_constant() || pb.is_constant()) return Polynomial(1);

    // main variable: common to both, smallest min-degree for a short sequence
    Var main = Var::x;
    int best = -1;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (!pa.uses(v) || !pb.uses(v)) continue;
        int d = std::min(pa.degree_in(v), pb.degree_in(v));
        if (best < 0 || d < best) {
            best = d;
            main = v;
        }
    }
    if (best < 0) return Polynomial(1); // no shared variable: units only

    Polynomial ca = content_in(pa, main);
    Polynomial cb = content_in(pb, main);
    Polynomial c = polynomial_gcd(ca, cb);
    Polynomial pp = subresultant_prs_gcd(exact_divide(pa, ca),
                                         exact_divide(pb, cb), main);
    return (c * pp).primitive_part();
}

SquarefreeResult squarefree_part(const Polynomial& f, Var v) {
    if (f.is_zero())
        fail(ErrorCode::PreconditionViolated, "squarefree part of zero");
    Polynomial df = f.derivative(v);
    Polynomial g = polynomial_gcd(f, df);
    SquarefreeResult out;
    out.part = exact_divide(f, g);
    out.is_squarefree = g.is_constant();
    return out;
}

} // namespace mufold
