#include "mufold/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mufold {

std::optional<Var> var_from_char(char c) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == c) return static_cast<Var>(i);
    return std::nullopt;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_[Monomial::one()] = c;
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_[Monomial::one()] = Rational(c);
}

Polynomial Polynomial::variable(Var v, int power) {
    Polynomial p;
    if (power < 0) fail(ErrorCode::PreconditionViolated, "negative exponent");
    p.terms_[Monomial::power(v, power)] = 1;
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial::one());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) fail(ErrorCode::PreconditionViolated, "negative power");
    Polynomial r(1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

int Polynomial::degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

bool Polynomial::uses(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m[v] > 0) return true;
    return false;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
        if (uses(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
}

Valuation Polynomial::order_at_origin() const {
    if (terms_.empty()) return Valuation::infinity();
    return Valuation::finite(terms_.begin()->first.total_degree());
}

Polynomial Polynomial::coeff_of(Var v, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m[v] != k) continue;
        Monomial rest = m;
        rest.set(v, 0);
        r.terms_.emplace(rest, c);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coeffs_in(Var v) const {
    int d = degree_in(v);
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d, -1) + 1));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.set(v, 0);
        out[m[v]].add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::leading_coeff_in(Var v) const {
    return coeff_of(v, degree_in(v));
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int k = m[v];
        if (k == 0) continue;
        Monomial d = m;
        d.set(v, k - 1);
        r.add_term(d, c * k);
    }
    return r;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    // Horner on the coefficients in v
    auto cs = coeffs_in(v);
    if (cs.empty()) return Polynomial();
    Polynomial r;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * value + *it;
    return r;
}

Polynomial Polynomial::substitute(Var v, const Rational& value) const {
    return substitute(v, Polynomial(value));
}

Polynomial Polynomial::substitute_truncated(Var v, const Polynomial& value,
                                            int bound) const {
    auto cs = coeffs_in(v);
    if (cs.empty()) return Polynomial();
    Polynomial r;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        r = (r * value).truncate_total_degree(bound) +
            it->truncate_total_degree(bound);
    return r;
}

Polynomial Polynomial::truncate_total_degree(int bound) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() > bound) break; // map is graded-ascending
        r.terms_.emplace(m, c);
    }
    return r;
}

Polynomial Polynomial::rename(Var from, Var to) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        int k = n[from];
        n.set(from, 0);
        n.set(to, n[to] + k);
        r.add_term(n, c);
    }
    return r;
}

Rational Polynomial::rational_content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    // sign follows the leading graded-lex term
    if (terms_.rbegin()->second < 0) content = -content;
    return content;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return Polynomial();
    Rational c = rational_content();
    Polynomial r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k / c);
    return r;
}

long Polynomial::weighted_degree(const Monomial& m,
                                 const std::array<long, kNumVars>& w) {
    long d = 0;
    for (int i = 0; i < kNumVars; ++i) d += static_cast<long>(m.e[i]) * w[i];
    return d;
}

std::optional<long> Polynomial::weighted_homogeneous_degree(
    const std::array<long, kNumVars>& w) const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        long d = weighted_degree(m, w);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << '*';
        os << kVarNames[i];
        if (m.e[i] > 1) os << '^' << m.e[i];
        first = false;
    }
    return os.str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading graded-lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono = monomial_str(m);
        if (mono.empty()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << '*';
            os << mono;
        }
        first = false;
    }
    return os.str();
}

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        fail(ErrorCode::PreconditionViolated, "division by the zero polynomial");
    Polynomial rem = num;
    Polynomial quot;
    const auto& dterms = den.terms();
    const Monomial& dlead = dterms.rbegin()->first;
    const Rational& dcoef = dterms.rbegin()->second;
    while (!rem.is_zero()) {
        const Monomial& rlead = rem.terms().rbegin()->first;
        const Rational& rcoef = rem.terms().rbegin()->second;
        if (!dlead.divides(rlead))
            fail(ErrorCode::NotDivisible, "exact division left a remainder");
        Monomial qm = rlead / dlead;
        Rational qc = rcoef / dcoef;
        quot.add_term(qm, qc);
        rem -= den * Polynomial::term(qc, qm);
    }
    return quot;
}

} // namespace mufold
