#pragma once

// Elementary symmetric sums of positive-integer tuples, verification of
// sigma_2 = sigma_n, and the compact (leading ones, tail) representation.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace sigmaeq {

/// sigma_1, sigma_2 and the full product of a sequence.
struct sigma_triple {
    big_int s1 = 0;
    big_int s2 = 0;
    big_int prod = 1;

    friend bool operator==(const sigma_triple&, const sigma_triple&) = default;
};

/// A nondecreasing tuple of positive integers with at least three entries.
/// The constructor sorts its input.
class solution_tuple {
public:
    explicit solution_tuple(std::vector<std::uint64_t> entries)
        : entries_(std::move(entries))
    {
        if (entries_.size() < 3)
            throw std::invalid_argument("a tuple needs at least 3 entries");
        std::sort(entries_.begin(), entries_.end());
        if (entries_.front() == 0)
            throw std::invalid_argument("tuple entries must be positive");
    }

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const std::uint64_t> entries() const& noexcept { return entries_; }
    std::span<const std::uint64_t> entries() const&& = delete; // would dangle
    std::uint64_t operator[](std::size_t k) const { return entries_[k]; }

    friend bool operator==(const solution_tuple&, const solution_tuple&) = default;
    friend auto operator<=>(const solution_tuple&, const solution_tuple&) = default;

private:
    std::vector<std::uint64_t> entries_;
};

/// A tuple written as (1 repeated `ones` times, tail) with every tail entry >= 2.
/// `m` is the common value sigma_2 = sigma_n once the tuple has been verified.
template <class Int>
struct basic_compact_solution {
    Int n = 0;
    Int ones = 0;
    std::vector<Int> tail;
    std::optional<big_int> m;

    std::size_t i() const noexcept { return tail.size(); }
    const Int& largest() const { return tail.back(); }

    /// Lexicographic order of the expanded tuples, computed without expanding.
    friend std::strong_ordering operator<=>(const basic_compact_solution& a,
                                            const basic_compact_solution& b)
    {
        if (a.ones != b.ones) {
            // At index min(ones) the side with more ones shows a 1, the other
            // a tail entry >= 2, unless that other tuple already ended.
            const bool a_more = a.ones > b.ones;
            const auto& shorter = a_more ? b : a;
            if (shorter.tail.empty())
                return a_more ? std::strong_ordering::greater : std::strong_ordering::less;
            return a_more ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        const auto c = std::lexicographical_compare_three_way(
            a.tail.begin(), a.tail.end(), b.tail.begin(), b.tail.end(),
            [](const Int& x, const Int& y) {
                return x < y ? std::strong_ordering::less
                             : (y < x ? std::strong_ordering::greater : std::strong_ordering::equal);
            });
        return c;
    }
    friend bool operator==(const basic_compact_solution& a, const basic_compact_solution& b)
    {
        return a.n == b.n && a.ones == b.ones && a.tail == b.tail;
    }
};

using compact_solution = basic_compact_solution<std::uint64_t>;
using big_compact_solution = basic_compact_solution<big_int>;

template <class Int>
sigma_triple eval_sigmas(std::span<const Int> xs)
{
    if (xs.empty())
        throw std::invalid_argument("eval_sigmas needs a nonempty sequence");
    sigma_triple r;
    big_int squares = 0;
    for (const Int& x : xs) {
        if (x < 1)
            throw std::invalid_argument("eval_sigmas needs positive entries");
        const big_int b = to_big(x);
        r.s1 += b;
        squares += b * b;
        r.prod *= b;
    }
    // s1^2 - sum x^2 is twice the sum over pairs, hence even.
    r.s2 = (r.s1 * r.s1 - squares) / 2;
    return r;
}

inline sigma_triple eval_sigmas(const std::vector<std::uint64_t>& xs)
{
    return eval_sigmas(std::span<const std::uint64_t>(xs));
}

inline sigma_triple eval_sigmas(const solution_tuple& t)
{
    return eval_sigmas(t.entries());
}

/// Sigmas of (1 x ones, tail) from the sigmas of the tail alone, in O(1).
inline sigma_triple split_sigma2(const big_int& ones, const sigma_triple& tail)
{
    if (ones < 0)
        throw std::invalid_argument("negative count of ones");
    sigma_triple r;
    r.s1 = ones + tail.s1;
    r.s2 = binomial2(ones) + ones * tail.s1 + tail.s2;
    r.prod = tail.prod;
    return r;
}

template <class Int>
sigma_triple compact_sigmas(const Int& ones, std::span<const Int> tail)
{
    sigma_triple t;
    if (!tail.empty())
        t = eval_sigmas(tail);
    return split_sigma2(to_big(ones), t);
}

/// Outcome of a verification. On rejection both sides are kept for diagnostics.
template <class Int>
struct basic_verdict {
    big_int sigma2;
    big_int product;
    std::optional<basic_compact_solution<Int>> solution;

    explicit operator bool() const noexcept { return solution.has_value(); }
};

using verdict = basic_verdict<std::uint64_t>;

template <class Int>
basic_compact_solution<Int> compact(std::span<const Int> sorted_entries)
{
    basic_compact_solution<Int> c;
    c.n = static_cast<Int>(sorted_entries.size());
    for (const Int& x : sorted_entries) {
        if (x == 1)
            c.ones = c.ones + 1;
        else
            c.tail.push_back(x);
    }
    return c;
}

inline compact_solution compact(const solution_tuple& t)
{
    return compact<std::uint64_t>(t.entries());
}

inline solution_tuple expand(const compact_solution& c)
{
    std::vector<std::uint64_t> xs(c.ones, 1);
    xs.insert(xs.end(), c.tail.begin(), c.tail.end());
    return solution_tuple(std::move(xs));
}

/// Verifies (1 x ones, tail). The tail is sorted; entries must be >= 2 and
/// the total length at least 3.
template <class Int>
basic_verdict<Int> is_solution(Int ones, std::vector<Int> tail)
{
    std::sort(tail.begin(), tail.end());
    if (!tail.empty() && tail.front() < 2)
        throw std::invalid_argument("tail entries must be >= 2");
    const big_int n = to_big(ones) + tail.size();
    if (n < 3)
        throw std::invalid_argument("a tuple needs at least 3 entries");

    const sigma_triple s = compact_sigmas<Int>(ones, tail);
    basic_verdict<Int> v{s.s2, s.prod, std::nullopt};
    if (s.s2 == s.prod) {
        basic_compact_solution<Int> c;
        c.n = from_big<Int>(n);
        c.ones = std::move(ones);
        c.tail = std::move(tail);
        c.m = s.s2;
        v.solution = std::move(c);
    }
    return v;
}

inline verdict is_solution(const solution_tuple& t)
{
    compact_solution c = compact(t);
    return is_solution<std::uint64_t>(c.ones, std::move(c.tail));
}

/// Denominators d_{ij} = m / (x_i x_j), i < j, in index order. Their
/// reciprocals sum to exactly 1 for every solution.
inline std::vector<big_int> egyptian_view(const compact_solution& c)
{
    if (!c.m)
        throw std::invalid_argument("egyptian_view needs a verified solution");
    const solution_tuple t = expand(c);
    const big_int& m = *c.m;
    std::vector<big_int> dens;
    dens.reserve(t.size() * (t.size() - 1) / 2);
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            dens.push_back(m / (big_int(t[a]) * t[b]));
    return dens;
}

inline big_rational reciprocal_sum(std::span<const big_int> dens)
{
    big_rational sum = 0;
    for (const big_int& d : dens)
        sum += big_rational(big_int(1), d);
    return sum;
}

template <class Int>
std::vector<Int> expand_entries(const basic_compact_solution<Int>& c)
{
    std::vector<Int> xs(static_cast<std::size_t>(c.ones), Int(1));
    xs.insert(xs.end(), c.tail.begin(), c.tail.end());
    return xs;
}

} // namespace sigmaeq
