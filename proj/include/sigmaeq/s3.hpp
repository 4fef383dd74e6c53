#pragma once

// Solutions with exactly three entries different from 1: (1 x (n-3), x, y, z).

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "factor.hpp"
#include "symmetric.hpp"

namespace sigmaeq {

template <class Int>
struct basic_s3_solution {
    Int n = 0;
    Int x = 0, y = 0, z = 0;
    Int d1 = 0, d2 = 0;

    basic_compact_solution<Int> to_compact() const
    {
        basic_compact_solution<Int> c;
        c.n = n;
        c.ones = n - 3;
        c.tail = {x, y, z};
        return c;
    }

    friend auto operator<=>(const basic_s3_solution&, const basic_s3_solution&) = default;
    friend bool operator==(const basic_s3_solution&, const basic_s3_solution&) = default;
};

using s3_solution = basic_s3_solution<std::uint64_t>;
using big_s3_solution = basic_s3_solution<big_int>;

/// f(n, (1 x (n-3), x)) = (n-2)((x+1)n + 2x^2 - 3x - 3) / 2.
inline std::uint64_t f3(std::uint64_t n, std::uint64_t x)
{
    if (n < 3 || x < 2)
        throw std::invalid_argument("f3 needs n >= 3 and x >= 2");
    const big_int bn = n, bx = x;
    const big_int v = (bn - 2) * ((bx + 1) * bn + 2 * bx * bx - 3 * bx - 3) / 2;
    return narrow_u64(v);
}

namespace detail {

template <class Int>
basic_s3_solution<Int> s3_from_xyz(const Int& n, Int x, Int y, Int z)
{
    std::array<Int, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    basic_s3_solution<Int> s;
    s.n = n;
    s.x = v[0];
    s.y = v[1];
    s.z = v[2];
    // d = (x-1)(w-1) - (n-2) for w in {y, z}
    s.d1 = (s.x - 1) * (s.y - 1) + 2 - n;
    s.d2 = (s.x - 1) * (s.z - 1) + 2 - n;
    return s;
}

} // namespace detail

/// S_3(n) ordered by (x, y).
inline std::vector<s3_solution> s3_enumerate(std::uint64_t n)
{
    const std::uint64_t x_max = xn2_bound(n);
    std::vector<s3_solution> out;
    for (std::uint64_t x = 2; x <= x_max; ++x) {
        const std::uint64_t f = f3(n, x);
        for (const auto& [d1, d2] : divisor_pairs(f)) {
            const std::uint64_t ny = n + d1 - 2;
            const std::uint64_t nz = n + d2 - 2;
            if (ny % (x - 1) != 0 || nz % (x - 1) != 0)
                continue;
            const std::uint64_t y = ny / (x - 1) + 1;
            if (y < x)
                continue;
            const std::uint64_t z = nz / (x - 1) + 1;
            if (!is_solution<std::uint64_t>(n - 3, {x, y, z}))
                throw std::logic_error("S_3 candidate failed verification");
            out.push_back({n, x, y, z, d1, d2});
        }
    }
    return out;
}

/// ceil(tau(f3(n,2)) / 2): the number of x = 2 solutions.
inline std::uint64_t s3_lower_bound(std::uint64_t n)
{
    return (tau(f3(n, 2)) + 1) / 2;
}

/// The explicit members of S_3(n) valid for n = 3 and every n >= 5: the
/// extremal (2, n, n(3n-5)/2) plus two parity-dependent tuples. Duplicates
/// collapse (at n = 3 all three coincide).
inline std::vector<s3_solution> canonical_families(std::uint64_t n)
{
    if (n < 3 || n == 4)
        throw std::invalid_argument("canonical families exist for n = 3 and n >= 5");
    std::vector<s3_solution> out;
    out.push_back(detail::s3_from_xyz<std::uint64_t>(n, 2, n, n * (3 * n - 5) / 2));
    if (n % 2 == 1) {
        out.push_back(detail::s3_from_xyz<std::uint64_t>(n, 2, 2 * n - 3, (5 * n - 3) / 2));
        out.push_back(detail::s3_from_xyz<std::uint64_t>(n, 3, n - 1, 3 * (n + 1) / 2));
    } else {
        out.push_back(detail::s3_from_xyz<std::uint64_t>(n, 2, (3 * n - 4) / 2, 2 * (2 * n - 1)));
        out.push_back(detail::s3_from_xyz<std::uint64_t>(n, 4, n / 2, 2 * (n + 3)));
    }
    for (const auto& s : out)
        if (!is_solution<std::uint64_t>(n - 3, {s.x, s.y, s.z}))
            throw std::logic_error("canonical family member failed verification");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

enum class cubic_family { a, b };

struct parametric_result {
    big_s3_solution solution; // entries as produced by the closed forms, not reordered
    big_int q;                // the cubic in k that parameterizes n = 4 q^3 + 2
    bool ordered = false;     // x <= y <= z
    bool verified = false;    // sigma_2 = sigma_n for the sorted tuple
};

/// Two infinite families in S_3 where the entries grow like 2^{-1/3} n^{2/3}.
/// Family a: y = 1 + 2^{-1/3}(n-2)^{2/3}. Family b: x = 1 + 2^{-1/3}(n-2)^{2/3}.
/// The closed forms only give x <= y <= z for k large enough; `ordered`
/// reports it. Family b at k is family a at k - 1 with the entries permuted
/// (z < x), so it is never ordered. Throws std::domain_error if the values are
/// not admissible at all.
inline parametric_result parametric_family(cubic_family variant, std::int64_t k_in)
{
    const big_int k = k_in;
    const big_int k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k, k6 = k5 * k;
    parametric_result r;
    big_int x, y, z;
    if (variant == cubic_family::a) {
        r.q = 4 * k3 + 2 * k2 + 2 * k - 2;
        x = 2 * r.q + 32 * k6 + 32 * k5 + 32 * k4 - 16 * k3 - 8 * k2 - 10 * k + 8;
        y = 2 * r.q * r.q + 1;
        z = r.q * (8 * k3 + 4 * k2 + 6 * k - 1) + 1;
    } else {
        r.q = 4 * k3 - 10 * k2 + 10 * k - 6;
        x = 2 * r.q * r.q + 1;
        y = r.q * (8 * k3 - 20 * k2 + 22 * k - 11) + 1;
        // The k^5 coefficient is -160; -150 does not satisfy the equation.
        z = 2 * r.q + 32 * k6 - 160 * k5 + 352 * k4 - 464 * k3 + 392 * k2 - 202 * k + 58;
    }
    const big_int n = 4 * r.q * r.q * r.q + 2;
    if (n < 3 || x < 2 || y < 2 || z < 2)
        throw std::domain_error("parametric family gives no admissible tuple for this k");

    r.solution.n = n;
    r.solution.x = x;
    r.solution.y = y;
    r.solution.z = z;
    r.solution.d1 = (x - 1) * (y - 1) + 2 - n;
    r.solution.d2 = (x - 1) * (z - 1) + 2 - n;
    r.ordered = x <= y && y <= z;
    r.verified = static_cast<bool>(is_solution<big_int>(n - 3, {x, y, z}));
    return r;
}

} // namespace sigmaeq
