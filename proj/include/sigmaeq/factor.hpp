#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace sigmaeq {

struct prime_power {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

/// Prime factorization by trial division, primes ascending.
inline std::vector<prime_power> factorize(std::uint64_t v)
{
    if (v == 0)
        throw std::invalid_argument("factorize needs a positive integer");
    std::vector<prime_power> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e)
            out.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p <= v / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (v > 1)
        out.push_back({v, 1});
    return out;
}

/// Flattened multiset of prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v)
{
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : factorize(v))
        out.insert(out.end(), e, p);
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t v)
{
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : factorize(v)) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Number of positive divisors.
inline std::uint64_t tau(std::uint64_t v)
{
    std::uint64_t t = 1;
    for (const auto& pp : factorize(v))
        t *= pp.exponent + 1;
    return t;
}

struct divisor_pair {
    std::uint64_t d1;
    std::uint64_t d2;

    friend bool operator==(const divisor_pair&, const divisor_pair&) = default;
};

/// All (d1, d2) with d1 * d2 = v and d1 <= d2, ascending in d1.
inline std::vector<divisor_pair> divisor_pairs(std::uint64_t v)
{
    std::vector<divisor_pair> out;
    for (std::uint64_t d : divisors(v)) {
        if (d > v / d)
            break;
        out.push_back({d, v / d});
    }
    return out;
}

inline std::vector<divisor_pair> divisor_pairs(const big_int& v)
{
    return divisor_pairs(narrow_u64(v));
}

} // namespace sigmaeq
