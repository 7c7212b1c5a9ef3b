#include "mufold/zpoly.hpp"

#include <algorithm>
#include <cstdint>

#include "mufold/errors.hpp"

namespace mufold {

ZPoly::ZPoly(const Integer& c) {
    if (c != 0) c_.push_back(c);
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const Integer& c, int k) {
    ZPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
        p.c_.back() = c;
    }
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& ZPoly::coeff(int k) const {
    static const Integer zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

int ZPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const Integer& k) const {
    if (k == 0) return ZPoly();
    std::vector<Integer> r = c_;
    for (auto& x : r) x *= k;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
    std::vector<Integer> r = c_;
    for (auto& x : r) x = -x;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) fail(ErrorCode::PreconditionViolated, "ZPoly division by zero");
    if (is_zero()) return ZPoly();
    std::vector<Integer> rem = c_;
    int dr = static_cast<int>(rem.size()) - 1;
    int dd = d.degree();
    if (dr < dd) fail(ErrorCode::NotDivisible, "ZPoly division left a remainder");
    std::vector<Integer> q(static_cast<std::size_t>(dr - dd) + 1, Integer(0));
    for (int k = dr - dd; k >= 0; --k) {
        Integer& top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        q[static_cast<std::size_t>(k)] = qk;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= qk * d.coeff(j);
    }
    return ZPoly(std::move(q));
}

ZPoly ZPoly::divexact(const Integer& k) const {
    std::vector<Integer> r = c_;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return ZPoly(std::move(r));
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly();
    std::vector<Integer> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<long>(i);
    return ZPoly(std::move(r));
}

Integer ZPoly::content() const {
    Integer g = 0;
    for (const auto& x : c_) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    Integer g = content();
    if (leading() < 0) g = -g;
    return divexact(g);
}

ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return ZPoly(Integer(1));
    int sign = 1;
    ZPoly prev(Integer(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return ZPoly(); // singular
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ZPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.divexact(prev);
            }
            m[i][k] = ZPoly();
        }
        prev = m[k][k];
    }
    ZPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
static ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    int db = b.degree();
    const Integer& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Integer lr = r.leading();
        r = r * lb - b * ZPoly::monomial(lr, shift);
    }
    return r;
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

namespace {

// F_p arithmetic on 62-bit primes
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<u64> reduce_mod(const ZPoly& f, u64 p) {
    std::vector<u64> r(static_cast<std::size_t>(f.degree()) + 1);
    Integer pp(static_cast<unsigned long>(p));
    for (int i = 0; i <= f.degree(); ++i) {
        Integer m = f.coeff(i) % pp;
        if (m < 0) m += pp;
        r[static_cast<std::size_t>(i)] = m.get_ui();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Euclid over F_p; returns the degree of the gcd
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto trim = [](std::vector<u64>& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            u64 q = mulmod(a.back(), inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                u64 sub = mulmod(q, b[j], p);
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

} // namespace

bool zpoly_squarefree(const ZPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() <= 1) return true;
    ZPoly fp = f.derivative();
    static const u64 primes[] = {2305843009213693951ULL, // 2^61 - 1
                                 1000000007ULL, 998244353ULL};
    for (u64 p : primes) {
        Integer pp(static_cast<unsigned long>(p));
        if (f.leading() % pp == 0 || fp.leading() % pp == 0) continue;
        // unit gcd mod p forces unit gcd over Q
        if (gcd_degree_mod(reduce_mod(f, p), reduce_mod(fp, p), p) == 0) return true;
    }
    return zpoly_gcd(f, fp).degree() == 0;
}

} // namespace mufold
