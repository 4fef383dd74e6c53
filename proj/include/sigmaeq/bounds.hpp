#pragma once

// Pruning bounds for S(n) and the intermediate inequalities that produce them.

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "integer.hpp"
#include "symmetric.hpp"

namespace sigmaeq {

struct bounds_report {
    std::uint64_t n = 0;
    std::uint64_t prefix_product_max = 0; // C(n,2): bound on x_1 ... x_{n-2}
    std::uint64_t i_max = 0;              // most entries != 1 in any solution
    std::uint64_t xn_max = 0;             // n(3n-5)/2
    std::uint64_t m_max = 0;              // n^2(3n-5)
    std::uint64_t xn2_max = 0;            // 1 + floor(2 (n-2)^{2/3})

    friend bool operator==(const bounds_report&, const bounds_report&) = default;
};

/// 1 + floor(cbrt(8 (n-2)^2)), i.e. 1 + floor(2 (n-2)^{2/3}) in integers.
inline std::uint64_t xn2_bound(std::uint64_t n)
{
    if (n < 3)
        throw std::invalid_argument("n must be at least 3");
    const std::uint64_t k = n - 2;
    return 1 + icbrt(checked_mul(8, checked_mul(k, k)));
}

/// Largest i with 2^(i-2) <= C(n,2).
inline std::uint64_t i_bound(std::uint64_t n)
{
    if (n < 3)
        throw std::invalid_argument("n must be at least 3");
    const std::uint64_t c = checked_mul(n, n - 1) / 2;
    return 2 + (std::bit_width(c) - 1);
}

inline bounds_report bounds_for(std::uint64_t n)
{
    if (n < 3)
        throw std::invalid_argument("n must be at least 3");
    bounds_report b;
    b.n = n;
    b.prefix_product_max = checked_mul(n, n - 1) / 2;
    b.i_max = i_bound(n);
    const std::uint64_t lin = checked_mul(3, n) - 5;
    b.xn_max = checked_mul(n, lin) / 2;
    b.m_max = checked_mul(checked_mul(n, n), lin);
    b.xn2_max = xn2_bound(n);
    return b;
}

/// Number of leading entries forced to be 1 in every solution of length n.
inline std::uint64_t forced_ones(std::uint64_t n)
{
    const std::uint64_t i = i_bound(n);
    return n > i ? n - i : 0;
}

/// Truth values of the intermediate estimates on the prefix X_{n-2} of a
/// solution with i >= 3 entries different from 1. Y is the part of the prefix
/// that is >= 2 (length i-2). Fractions are cleared by 2^(i-3).
struct proof_inequalities {
    bool sum_vs_product = false;      // 2^(i-3) s1(Y) <= (i-2) prod(Y)
    bool pairs_vs_product = false;    // 2^(i-3) s2(Y) <= (i-2)(i-3) prod(Y)
    bool prefix_sum_by_i = false;     // s1(X) <= n-i + (i-2)/2^(i-3) prod(X)
    bool prefix_pairs_by_i = false;   // s2(X) <= C(n-i,2) + (i-2)(n-3)/2^(i-3) prod(X)
    bool prefix_sum = false;          // s1(X) <= n-3 + prod(X)
    bool prefix_pairs = false;        // s2(X) <= (n-3)(n-4)/2 + (n-3) prod(X)

    bool all() const noexcept
    {
        return sum_vs_product && pairs_vs_product && prefix_sum_by_i && prefix_pairs_by_i &&
               prefix_sum && prefix_pairs;
    }
};

template <class Int>
proof_inequalities check_proof_inequalities(const basic_compact_solution<Int>& c)
{
    const std::size_t i = c.i();
    if (i < 3)
        throw std::invalid_argument("contract violation: a solution has at least 3 entries != 1");
    const big_int n = to_big(c.n);
    const big_int ones = to_big(c.ones);
    const std::span<const Int> y(c.tail.data(), i - 2);

    const sigma_triple ys = eval_sigmas(y);
    const sigma_triple xs = split_sigma2(ones, ys);
    const big_int pow2 = big_int(1) << (i - 3);
    const big_int im2 = i - 2;
    const big_int im3 = i - 3;
    const big_int nmi = n - i;

    proof_inequalities r;
    r.sum_vs_product = pow2 * ys.s1 <= im2 * ys.prod;
    r.pairs_vs_product = pow2 * ys.s2 <= im2 * im3 * ys.prod;
    r.prefix_sum_by_i = pow2 * xs.s1 <= pow2 * nmi + im2 * xs.prod;
    r.prefix_pairs_by_i =
        2 * pow2 * xs.s2 <= pow2 * nmi * (nmi - 1) + 2 * im2 * (n - 3) * xs.prod;
    r.prefix_sum = xs.s1 <= n - 3 + xs.prod;
    r.prefix_pairs = 2 * xs.s2 <= (n - 3) * (n - 4) + 2 * (n - 3) * xs.prod;
    return r;
}

/// Whether a solution respects every bound of its length.
struct bounds_check {
    bool m = false;
    bool xn = false;
    bool xn2 = false;
    bool i = false;
    bool prefix_product = false;

    bool all() const noexcept { return m && xn && xn2 && i && prefix_product; }
};

inline bounds_check check_bounds(const compact_solution& c)
{
    if (!c.m)
        throw std::invalid_argument("check_bounds needs a verified solution");
    const bounds_report b = bounds_for(c.n);
    const solution_tuple t = expand(c);
    big_int prefix = 1;
    for (std::size_t k = 0; k + 2 < t.size(); ++k)
        prefix *= t[k];

    bounds_check r;
    r.m = *c.m <= b.m_max;
    r.xn = t[t.size() - 1] <= b.xn_max;
    r.xn2 = t[t.size() - 3] <= b.xn2_max;
    r.i = c.i() <= b.i_max;
    r.prefix_product = prefix <= b.prefix_product_max;
    return r;
}

} // namespace sigmaeq
