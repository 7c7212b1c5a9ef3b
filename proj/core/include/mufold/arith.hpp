#pragma once

#include <vector>

#include "mufold/errors.hpp"

namespace mufold {

// prime factorization with strictly increasing primes; empty for m = 1
struct Factorization {
    std::vector<std::pair<long, int>> prime_powers;

    // primes repeated by multiplicity, ascending: 36 -> {2,2,3,3}
    std::vector<long> flat_primes() const;
};

Factorization factorize(long m);

// maximum length of a nested divisor chain m = d0 > d1 > ... > 1, which is
// the number of prime factors counted with multiplicity; sigma(1) = 1
long sigma(long m);

// strictly decreasing divisor chain d0 = m > d1 > ... > d_{k-1} = 1 with
// each entry dividing the previous one
struct DivisorChain {
    std::vector<long> divisors;

    long at(int i) const { return divisors[static_cast<std::size_t>(i)]; }
    int length() const { return static_cast<int>(divisors.size()); }
};

// The chain used by the minimal normal forms: d_i is the product of the
// (k-1)-i smallest prime factors of m (with multiplicity, ascending),
// for i = 1 .. k-2. Requires 2 <= k <= sigma(m)+1.
DivisorChain minimal_divisor_chain(long m, int k);

} // namespace mufold
