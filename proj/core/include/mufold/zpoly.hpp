#pragma once

#include <vector>

#include "mufold/rational.hpp"

namespace mufold {

// Dense univariate polynomial over Z. Internal workhorse for the Bareiss
// elimination paths whose Sylvester entries live in one variable, and for
// univariate remainder sequences.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const Integer& c);
    explicit ZPoly(std::vector<Integer> coeffs); // c[i] is the coefficient of w^i

    static ZPoly monomial(const Integer& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Integer& coeff(int k) const;
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& leading() const { return c_.back(); }
    int order() const; // smallest k with c[k] != 0; -1 for zero

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Integer& k) const;
    ZPoly operator-() const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    // caller guarantees exact divisibility
    ZPoly divexact(const ZPoly& d) const;
    ZPoly divexact(const Integer& k) const;

    ZPoly derivative() const;
    Integer content() const; // non-negative; 0 for the zero polynomial
    ZPoly primitive_part() const;

private:
    void trim();
    std::vector<Integer> c_;
};

// Determinant by fraction-free Gaussian elimination (Bareiss) with row
// pivoting. Every entry stays an exact minor of the input matrix.
ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m);

// gcd of primitive parts via a pseudo-remainder sequence with content
// stripping; result is primitive with positive leading coefficient.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// True only when p is certainly squarefree: gcd(p, p') is checked modulo a
// few word-size primes (a unit gcd mod p certifies a unit gcd over Z) with
// an exact remainder-sequence fallback when every prime is inconclusive.
bool zpoly_squarefree(const ZPoly& p);

} // namespace mufold
