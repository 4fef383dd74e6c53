#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "enumerate.hpp"
#include "symmetric.hpp"

namespace sigmaeq {

/// |{x_1, ..., x_n}|
template <class Int>
std::size_t distinct_count(const basic_compact_solution<Int>& c)
{
    std::set<Int> values(c.tail.begin(), c.tail.end());
    return values.size() + (c.ones > 0 ? 1 : 0);
}

/// M(n): fewest distinct entries over S(n).
inline std::size_t min_distinct(std::uint64_t n, unsigned jobs = 1)
{
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& c : enumerate(n, jobs))
        best = std::min(best, distinct_count(c));
    return best;
}

/// A solution (1 x (n-k), x repeated k times), certified by
/// y^2 = 8x^k + 4kx^2 - 4kx + 1 with y = 2n + 2k(x-1) - 1.
struct equal_block_hit {
    std::uint64_t k = 0;
    std::uint64_t x = 0;
    big_int n;
    big_int y;

    friend bool operator==(const equal_block_hit&, const equal_block_hit&) = default;
};

inline big_int block_polynomial(std::uint64_t k, std::uint64_t x)
{
    const big_int bx = x;
    return 8 * boost::multiprecision::pow(bx, static_cast<unsigned>(k)) + 4 * k * bx * bx -
           4 * k * bx + 1;
}

namespace detail {

inline std::vector<equal_block_hit> search_block(std::uint64_t k, std::uint64_t x_max)
{
    std::vector<equal_block_hit> hits;
    for (std::uint64_t x = 2; x <= x_max; ++x) {
        big_int y;
        if (!is_square(block_polynomial(k, x), y))
            continue;
        const big_int twice_n = y + 1 - big_int(2 * k) * (x - 1);
        if (twice_n <= 0 || twice_n % 2 != 0)
            continue;
        const big_int n = twice_n / 2;
        if (n < 3 || n < k)
            continue;
        auto v = is_solution<big_int>(n - k, std::vector<big_int>(k, big_int(x)));
        if (!v)
            throw std::logic_error("equal-block candidate failed verification");
        hits.push_back({k, x, n, y});
    }
    return hits;
}

} // namespace detail

/// All (k, x) with k in [k_lo, k_hi], 2 <= x <= x_max giving a solution whose
/// entries are 1 and x only. Ordered by (k, x); work is split over k.
inline std::vector<equal_block_hit> search_equal_blocks(std::uint64_t k_lo, std::uint64_t k_hi,
                                                        std::uint64_t x_max, unsigned jobs = 1)
{
    if (k_lo < 1 || k_hi < k_lo)
        throw std::invalid_argument("block length range must satisfy 1 <= k_lo <= k_hi");
    const std::size_t len = k_hi - k_lo + 1;
    std::vector<std::vector<equal_block_hit>> per_k(len);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(len)));
    auto work = [&](unsigned w) {
        for (std::size_t s = w; s < len; s += jobs)
            per_k[s] = detail::search_block(k_lo + s, x_max);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
    }
    std::vector<equal_block_hit> out;
    for (auto& hits : per_k)
        out.insert(out.end(), hits.begin(), hits.end());
    return out;
}

/// (1 x k, tail, Y) with k = prod(tail) - s1(tail) - 1 and
/// Y = C(k,2) + s2(tail) + k s1(tail). Rejects the tails (2,2) and (2,3).
inline big_compact_solution construct_max_distinct(const std::vector<std::uint64_t>& tail)
{
    if (tail.size() < 2)
        throw std::invalid_argument("tail needs at least 2 entries");
    if (!std::is_sorted(tail.begin(), tail.end()) || tail.front() < 2)
        throw std::invalid_argument("tail must be nondecreasing with entries >= 2");
    if (tail == std::vector<std::uint64_t>{2, 2} || tail == std::vector<std::uint64_t>{2, 3})
        throw std::invalid_argument("tails (2,2) and (2,3) admit no construction");

    const sigma_triple s = eval_sigmas(tail);
    const big_int k = s.prod - s.s1 - 1;
    if (k <= 0)
        throw std::domain_error("derived count of ones is not positive");
    const big_int top = binomial2(k) + s.s2 + k * s.s1;

    std::vector<big_int> full(tail.begin(), tail.end());
    full.push_back(top);
    auto v = is_solution<big_int>(k, std::move(full));
    if (!v)
        throw std::logic_error("constructed tuple failed verification");
    return std::move(*v.solution);
}

/// construct_max_distinct((2, 3, ..., m+1)): m + 2 distinct values.
inline big_compact_solution max_distinct_witness(std::uint64_t m)
{
    if (m < 3)
        throw std::invalid_argument("max_distinct_witness needs m >= 3");
    std::vector<std::uint64_t> tail(m);
    for (std::uint64_t j = 0; j < m; ++j)
        tail[j] = j + 2;
    return construct_max_distinct(tail);
}

} // namespace sigmaeq
