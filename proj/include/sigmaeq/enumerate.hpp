#pragma once

// Complete enumeration of S(n). Every solution is determined by its first n-2
// entries (the prefix) and a divisor pair (d1, d2) of
//     f = s1(P)^2 + s2(P) (prod(P) - 1),
// via x_{n-1} = (s1 + d1) / (prod - 1), x_n = (s1 + d2) / (prod - 1).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "factor.hpp"
#include "symmetric.hpp"

namespace sigmaeq {

struct prefix {
    std::uint64_t n = 0;
    std::uint64_t ones = 0;
    std::vector<std::uint64_t> tail;
    sigma_triple sigmas;

    std::uint64_t last() const { return tail.empty() ? 1 : tail.back(); }
};

inline prefix make_prefix(std::uint64_t n, std::uint64_t ones, std::vector<std::uint64_t> tail)
{
    if (n < 3 || ones + tail.size() != n - 2)
        throw std::invalid_argument("prefix length must be n - 2");
    std::sort(tail.begin(), tail.end());
    if (!tail.empty() && tail.front() < 2)
        throw std::invalid_argument("prefix tail entries must be >= 2");
    prefix p{n, ones, std::move(tail), {}};
    p.sigmas = compact_sigmas<std::uint64_t>(p.ones, p.tail);
    return p;
}

/// f(n, P) = s1^2 + s2 (prod - 1).
inline big_int f_value(const prefix& p)
{
    if (p.sigmas.prod < 2)
        throw std::invalid_argument("f_value needs a prefix with product >= 2");
    return p.sigmas.s1 * p.sigmas.s1 + p.sigmas.s2 * (p.sigmas.prod - 1);
}

/// All solutions whose first n-2 entries are exactly `p`.
inline std::vector<compact_solution> extend_prefix(const prefix& p)
{
    const big_int f = f_value(p);
    const big_int& s1 = p.sigmas.s1;
    const big_int den = p.sigmas.prod - 1;
    const std::uint64_t last = p.last();

    std::vector<compact_solution> out;
    for (const auto& [d1, d2] : divisor_pairs(f)) {
        const big_int ny = s1 + d1;
        const big_int nz = s1 + d2;
        if (ny % den != 0 || nz % den != 0)
            continue;
        const std::uint64_t y = narrow_u64(ny / den);
        if (y < last)
            continue;
        const std::uint64_t z = narrow_u64(nz / den);
        std::vector<std::uint64_t> tail = p.tail;
        tail.push_back(y);
        tail.push_back(z);
        auto v = is_solution<std::uint64_t>(p.ones, std::move(tail));
        if (!v)
            throw std::logic_error("divisor-pair completion failed verification");
        out.push_back(std::move(*v.solution));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

inline void grow_tails(std::uint64_t max_len, std::uint64_t max_entry, std::uint64_t max_prod,
                       std::vector<std::uint64_t>& cur, std::uint64_t prod,
                       std::vector<std::vector<std::uint64_t>>& out)
{
    if (!cur.empty())
        out.push_back(cur);
    if (cur.size() == max_len)
        return;
    const std::uint64_t lo = cur.empty() ? 2 : cur.back();
    for (std::uint64_t x = lo; x <= max_entry && x <= max_prod / prod; ++x) {
        cur.push_back(x);
        grow_tails(max_len, max_entry, max_prod, cur, prod * x, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Every prefix admissible for length n: product in [2, C(n,2)], at most
/// i_max - 2 entries != 1, each <= xn2_max. Ordered by ones descending, then
/// tail lexicographic.
inline std::vector<prefix> admissible_prefixes(std::uint64_t n)
{
    const bounds_report b = bounds_for(n);
    const std::uint64_t max_len = std::min<std::uint64_t>(b.i_max - 2, n - 2);

    std::vector<std::vector<std::uint64_t>> tails;
    std::vector<std::uint64_t> cur;
    detail::grow_tails(max_len, b.xn2_max, b.prefix_product_max, cur, 1, tails);
    std::stable_sort(tails.begin(), tails.end(),
                     [](const auto& a, const auto& c) {
                         if (a.size() != c.size())
                             return a.size() < c.size();
                         return a < c;
                     });

    std::vector<prefix> out;
    out.reserve(tails.size());
    for (auto& t : tails) {
        const std::uint64_t ones = n - 2 - t.size();
        out.push_back(make_prefix(n, ones, std::move(t)));
    }
    return out;
}

/// S(n) in lexicographic order of the expanded tuples. The prefix stream is
/// split by stride over `jobs` workers; the result does not depend on `jobs`.
inline std::vector<compact_solution> enumerate(std::uint64_t n, unsigned jobs = 1)
{
    const std::vector<prefix> prefixes = admissible_prefixes(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(prefixes.size())));

    std::vector<std::vector<compact_solution>> parts(jobs);
    auto work = [&](unsigned w) {
        for (std::size_t k = w; k < prefixes.size(); k += jobs) {
            auto sols = extend_prefix(prefixes[k]);
            parts[w].insert(parts[w].end(), std::make_move_iterator(sols.begin()),
                            std::make_move_iterator(sols.end()));
        }
        std::sort(parts[w].begin(), parts[w].end());
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
    }

    std::vector<compact_solution> all;
    for (auto& part : parts) {
        const auto mid = all.size();
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
        std::inplace_merge(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(mid), all.end());
    }
    const auto dup = std::adjacent_find(all.begin(), all.end());
    assert(dup == all.end() && "two prefixes produced the same solution");
    (void)dup;
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

/// Independent exhaustive search: all nondecreasing x_1..x_{n-1} <= cap whose
/// first n-2 entries have product <= C(n,2), with
///     x_n = s2(X_{n-1}) / (prod(X_{n-1}) - s1(X_{n-1})).
/// Sigmas are computed pairwise, not through eval_sigmas. Complete when
/// cap >= n(3n-5)/2.
inline std::vector<compact_solution> enumerate_brute(std::uint64_t n, std::uint64_t cap)
{
    if (n < 3)
        throw std::invalid_argument("n must be at least 3");
    const std::uint64_t max_prod = n * (n - 1) / 2;
    std::vector<compact_solution> out;
    std::vector<std::uint64_t> xs;
    xs.reserve(n);

    auto finish = [&] {
        big_int s1 = 0, s2 = 0, prod = 1;
        for (std::size_t a = 0; a < xs.size(); ++a) {
            s1 += xs[a];
            prod *= xs[a];
            for (std::size_t b = a + 1; b < xs.size(); ++b)
                s2 += big_int(xs[a]) * xs[b];
        }
        const big_int den = prod - s1;
        if (den <= 0 || s2 % den != 0)
            return;
        const big_int xn = s2 / den;
        if (xn < xs.back())
            return;
        std::vector<std::uint64_t> full = xs;
        full.push_back(narrow_u64(xn));
        auto v = is_solution(solution_tuple(std::move(full)));
        if (v)
            out.push_back(std::move(*v.solution));
    };

    auto rec = [&](auto&& self, std::uint64_t prod) -> void {
        if (xs.size() == n - 1) {
            finish();
            return;
        }
        const std::uint64_t lo = xs.empty() ? 1 : xs.back();
        if (xs.size() < n - 2) {
            for (std::uint64_t x = lo; x <= cap && x <= max_prod / prod; ++x) {
                xs.push_back(x);
                self(self, prod * x);
                xs.pop_back();
            }
        } else {
            for (std::uint64_t x = lo; x <= cap; ++x) {
                xs.push_back(x);
                self(self, prod);
                xs.pop_back();
            }
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sigmaeq
