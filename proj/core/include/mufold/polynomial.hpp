#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mufold/errors.hpp"
#include "mufold/rational.hpp"

namespace mufold {

// Fixed global alphabet. The term order (and therefore every printed
// polynomial) is graded lexicographic with x > y > z > t > u > v.
enum class Var : int { x = 0, y = 1, z = 2, t = 3, u = 4, v = 5 };

constexpr int kNumVars = 6;
constexpr std::array<char, kNumVars> kVarNames = {'x', 'y', 'z', 't', 'u', 'v'};

std::optional<Var> var_from_char(char c);

// Exponent vector. Component-wise non-negative; degrees of the objects here
// stay far below the uint16 range (the largest resultants reach a few hundred).
struct Monomial {
    std::array<uint16_t, kNumVars> e{};

    int total_degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    void set(Var v, int k) { e[static_cast<int>(v)] = static_cast<uint16_t>(k); }

    bool divides(const Monomial& other) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = static_cast<uint16_t>(e[i] + other.e[i]);
        return r;
    }
    // quotient, caller guarantees divisibility
    Monomial operator/(const Monomial& other) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e[i] = static_cast<uint16_t>(e[i] - other.e[i]);
        return r;
    }
    bool operator==(const Monomial& other) const { return e == other.e; }

    static Monomial one() { return Monomial{}; }
    static Monomial power(Var v, int k) {
        Monomial m;
        m.set(v, k);
        return m;
    }
};

// Graded lex: total degree first, then lexicographic with x largest.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (int i = 0; i < kNumVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

// Order of a polynomial at the origin: the minimum total degree of its
// support, +infinity for the zero polynomial.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(int v) { return Valuation(v); }

    bool is_infinite() const { return !value_.has_value(); }
    int value() const { return *value_; }

    bool operator==(const Valuation& o) const { return value_ == o.value_; }
    bool operator>=(int v) const { return is_infinite() || *value_ >= v; }
    bool operator>(int v) const { return is_infinite() || *value_ > v; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(*value_); }

private:
    Valuation() = default;
    explicit Valuation(int v) : value_(v) {}
    std::optional<int> value_;
};

// Sparse multivariate polynomial over Q in canonical form: the term map never
// stores a zero coefficient, so equality of maps is equality of polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c);

    static Polynomial variable(Var v, int power = 1);
    static Polynomial term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (zero if absent)
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int n) const;

    int total_degree() const; // -1 for zero
    int degree_in(Var v) const; // -1 for zero
    bool uses(Var v) const;
    std::vector<Var> variables() const;

    Valuation order_at_origin() const;

    // coefficient of v^k, a polynomial in the remaining variables
    Polynomial coeff_of(Var v, int k) const;
    // all coefficients [0 .. degree_in(v)]
    std::vector<Polynomial> coeffs_in(Var v) const;
    Polynomial leading_coeff_in(Var v) const;

    Polynomial derivative(Var v) const;

    Polynomial substitute(Var v, const Polynomial& value) const;
    Polynomial substitute(Var v, const Rational& value) const;
    // substitution with all result terms above total degree `bound` dropped
    Polynomial substitute_truncated(Var v, const Polynomial& value, int bound) const;
    Polynomial truncate_total_degree(int bound) const;
    Polynomial rename(Var from, Var to) const;

    // f = content * primitive with primitive integer-coefficient, integer
    // content 1 and positive leading (graded-lex) coefficient.
    Rational rational_content() const;
    Polynomial primitive_part() const;

    // weighted degree of a monomial under integer weights (one per Var)
    static long weighted_degree(const Monomial& m, const std::array<long, kNumVars>& w);
    // the common weighted degree of all terms, or nullopt if mixed / zero
    std::optional<long> weighted_homogeneous_degree(const std::array<long, kNumVars>& w) const;

    std::string str() const;

private:
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

std::string monomial_str(const Monomial& m);

// --- module operations -------------------------------------------------

// Exact quotient; throws NotDivisible when den does not divide num.
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

// Sylvester resultant with respect to v, eliminated by fraction-free
// (Bareiss) row reduction so every intermediate value is exact.
// Convention for degenerate degrees: Res(f, c) = c^deg(f); both inputs of
// degree zero in v raise DegenerateInput.
Polynomial resultant(const Polynomial& f, const Polynomial& g, Var v);

// Resultant of two polynomials that are weighted-homogeneous for the same
// weight vector: computed on a dehomogenized copy and rehomogenized from the
// forced weighted degree. Equal to resultant(f, g, v); exists because the
// double-point resultants of Table-sized germs are far cheaper this way.
Polynomial resultant_weighted(const Polynomial& f, const Polynomial& g, Var v,
                              const std::array<long, kNumVars>& weights);

// gcd up to a positive rational unit; result is integer-primitive with
// positive leading coefficient. gcd(0,0) = 0.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

struct SquarefreeResult {
    Polynomial part;
    bool is_squarefree = false;
};

// f / gcd(f, df/dv), gcd by a subresultant remainder sequence with content
// stripping. is_squarefree reports whether that gcd was a unit.
SquarefreeResult squarefree_part(const Polynomial& f, Var v);

// Unique series x = xi(y,t) with f1(xi, y, t) = 0 mod (y,t)^{N+1}, for f1
// with a unit linear part in x. Fixed-point iteration, truncated at total
// order N; the residual order is re-verified before returning.
Polynomial solve_first_component(const Polynomial& f1, int truncation_order);

} // namespace mufold
