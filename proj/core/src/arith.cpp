#include "mufold/arith.hpp"

namespace mufold {

std::vector<long> Factorization::flat_primes() const {
    std::vector<long> out;
    for (const auto& [p, a] : prime_powers)
        for (int i = 0; i < a; ++i) out.push_back(p);
    return out;
}

Factorization factorize(long m) {
    if (m < 1) fail(ErrorCode::PreconditionViolated, "factorize needs m >= 1");
    Factorization f;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        f.prime_powers.emplace_back(p, a);
    }
    if (m > 1) f.prime_powers.emplace_back(m, 1);
    return f;
}

long sigma(long m) {
    if (m < 1) fail(ErrorCode::PreconditionViolated, "sigma needs m >= 1");
    if (m == 1) return 1;
    long s = 0;
    for (const auto& [p, a] : factorize(m).prime_powers) s += a;
    return s;
}

DivisorChain minimal_divisor_chain(long m, int k) {
    if (m < 2) fail(ErrorCode::PreconditionViolated, "divisor chain needs m >= 2");
    if (k < 2) fail(ErrorCode::KTooSmall, "a branch has at least two exponents");
    if (k > sigma(m) + 1)
        fail(ErrorCode::KTooLarge,
             "exponent count exceeds sigma(m)+1 for m = " + std::to_string(m));
    auto primes = factorize(m).flat_primes();
    DivisorChain chain;
    chain.divisors.push_back(m);
    for (int i = 1; i <= k - 2; ++i) {
        long d = 1;
        for (int j = 0; j < (k - 1) - i; ++j)
            d *= primes[static_cast<std::size_t>(j)];
        chain.divisors.push_back(d);
    }
    chain.divisors.push_back(1);
    return chain;
}

} // namespace mufold
