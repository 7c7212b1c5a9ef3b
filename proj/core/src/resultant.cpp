#include <utility>
#include <vector>

#include "mufold/polynomial.hpp"
#include "mufold/zpoly.hpp"

namespace mufold {

namespace {

Integer ipow(Integer base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Polynomial sparse_bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(1);
    int sign = 1;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = Polynomial();
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// integer-scaled copy: returns (scale, scale * f) with integer coefficients
std::pair<Integer, Polynomial> clear_denominators(const Polynomial& f) {
    Integer scale = 1;
    for (const auto& [m, c] : f.terms()) scale = lcm(scale, denominator(c));
    return {scale, f * Rational(scale)};
}

ZPoly to_zpoly(const Polynomial& p, Var w) {
    if (p.is_zero()) return ZPoly();
    std::vector<Integer> c(static_cast<std::size_t>(p.degree_in(w)) + 1, Integer(0));
    for (const auto& [m, q] : p.terms()) c[m[w]] = numerator(q);
    return ZPoly(std::move(c));
}

Polynomial from_zpoly(const ZPoly& p, Var w) {
    Polynomial r;
    for (int i = 0; i <= p.degree(); ++i)
        r.add_term(Monomial::power(w, i), Rational(p.coeff(i)));
    return r;
}

template <typename Entry>
std::vector<std::vector<Entry>> sylvester(const std::vector<Entry>& fc,
                                          const std::vector<Entry>& gc) {
    const int df = static_cast<int>(fc.size()) - 1;
    const int dg = static_cast<int>(gc.size()) - 1;
    const int n = df + dg;
    std::vector<std::vector<Entry>> m(static_cast<std::size_t>(n));
    for (auto& row : m) row.assign(static_cast<std::size_t>(n), Entry());
    for (int i = 0; i < dg; ++i)
        for (int k = 0; k <= df; ++k)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
                fc[static_cast<std::size_t>(df - k)];
    for (int i = 0; i < df; ++i)
        for (int k = 0; k <= dg; ++k)
            m[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + k)] =
                gc[static_cast<std::size_t>(dg - k)];
    return m;
}

// Both inputs involve at most v and one further variable: run Bareiss over
// dense integer univariates. Far cheaper than the sparse path.
Polynomial dense_resultant(const Polynomial& f, const Polynomial& g, Var v, Var w) {
    auto [sf, fi] = clear_denominators(f);
    auto [sg, gi] = clear_denominators(g);
    const int df = fi.degree_in(v);
    const int dg = gi.degree_in(v);
    std::vector<ZPoly> fc(static_cast<std::size_t>(df) + 1);
    std::vector<ZPoly> gc(static_cast<std::size_t>(dg) + 1);
    for (int k = 0; k <= df; ++k)
        fc[static_cast<std::size_t>(k)] = to_zpoly(fi.coeff_of(v, k), w);
    for (int k = 0; k <= dg; ++k)
        gc[static_cast<std::size_t>(k)] = to_zpoly(gi.coeff_of(v, k), w);
    ZPoly det = bareiss_determinant(sylvester(fc, gc));
    // Res(f, g) = Res(sf*f, sg*g) / (sf^dg * sg^df)
    Rational unscale(Integer(1), ipow(sf, static_cast<unsigned long>(dg)) *
                                     ipow(sg, static_cast<unsigned long>(df)));
    unscale.canonicalize();
    return from_zpoly(det, w) * unscale;
}

Polynomial generic_resultant(const Polynomial& f, const Polynomial& g, Var v) {
    auto fc = f.coeffs_in(v);
    auto gc = g.coeffs_in(v);
    return sparse_bareiss_determinant(sylvester(fc, gc));
}

// Handles zero / v-constant inputs; returns the full resultant when trivial.
// Sets done=false when the regular Sylvester path has to run.
Polynomial degenerate_cases(const Polynomial& f, const Polynomial& g, Var v,
                            bool& done) {
    done = true;
    const int df = f.degree_in(v);
    const int dg = g.degree_in(v);
    if (f.is_zero() || g.is_zero()) {
        if (df <= 0 && dg <= 0)
            fail(ErrorCode::DegenerateInput,
                 "resultant of two polynomials constant in the eliminated variable");
        return Polynomial();
    }
    if (df == 0 && dg == 0)
        fail(ErrorCode::DegenerateInput,
             "resultant of two polynomials constant in the eliminated variable");
    if (df == 0) return f.pow(dg);
    if (dg == 0) return g.pow(df);
    done = false;
    return Polynomial();
}

} // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, Var v) {
    bool done = false;
    Polynomial r = degenerate_cases(f, g, v, done);
    if (done) return r;

    // pick the dense path when at most one variable besides v is involved
    Var other = v;
    int others = 0;
    for (int i = 0; i < kNumVars; ++i) {
        Var w = static_cast<Var>(i);
        if (w == v) continue;
        if (f.uses(w) || g.uses(w)) {
            other = w;
            ++others;
        }
    }
    if (others <= 1) {
        Var w = (others == 0) ? (v == Var::x ? Var::y : Var::x) : other;
        return dense_resultant(f, g, v, w);
    }
    return generic_resultant(f, g, v);
}

Polynomial resultant_weighted(const Polynomial& f, const Polynomial& g, Var v,
                              const std::array<long, kNumVars>& weights) {
    bool done = false;
    Polynomial r = degenerate_cases(f, g, v, done);
    if (done) return r;

    auto wa = f.weighted_homogeneous_degree(weights);
    auto wb = g.weighted_homogeneous_degree(weights);
    if (!wa || !wb)
        fail(ErrorCode::PreconditionViolated,
             "resultant_weighted needs weighted-homogeneous inputs");

    // coefficients must live in {x, y}: one of them is set to 1 and recovered
    // afterwards from the weighted degree
    for (int i = 0; i < kNumVars; ++i) {
        Var w = static_cast<Var>(i);
        if (w == Var::x || w == Var::y || w == v) continue;
        if (f.uses(w) || g.uses(w))
            fail(ErrorCode::PreconditionViolated,
                 "resultant_weighted supports coefficients in x, y only");
    }

    const long a = f.degree_in(v);
    const long b = g.degree_in(v);
    const long wv = weights[static_cast<int>(v)];
    const long total = b * (*wa) + a * (*wb) - a * b * wv;

    // keep the heavier variable: its exponents in the result are smaller
    const long wx = weights[static_cast<int>(Var::x)];
    const long wy = weights[static_cast<int>(Var::y)];
    Var keep = (wx >= wy) ? Var::x : Var::y;
    Var drop = (keep == Var::x) ? Var::y : Var::x;
    const long wkeep = weights[static_cast<int>(keep)];
    const long wdrop = weights[static_cast<int>(drop)];

    Polynomial fd = f.substitute(drop, Rational(1));
    Polynomial gd = g.substitute(drop, Rational(1));
    if (fd.degree_in(v) != static_cast<int>(a) || gd.degree_in(v) != static_cast<int>(b))
        fail(ErrorCode::PreconditionViolated,
             "weighted resultant specialization dropped the leading term");

    Polynomial rd = dense_resultant(fd, gd, v, keep);

    // rehomogenize: the dropped exponent is forced by the weighted degree
    Polynomial out;
    for (const auto& [m, c] : rd.terms()) {
        long alpha = m[keep];
        long rem = total - alpha * wkeep;
        if (rem < 0 || rem % wdrop != 0)
            fail(ErrorCode::PreconditionViolated,
                 "weighted resultant rehomogenization failed");
        Monomial full = m;
        full.set(drop, static_cast<int>(rem / wdrop));
        out.add_term(full, c);
    }
    return out;
}

} // namespace mufold
