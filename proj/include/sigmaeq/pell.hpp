#pragma once

// Infinite families in S_3 coming from Pell-type equations.
//
// With x = 2 the completions are y = n + d1 - 1, z = n + d2 - 1 where
// d1 d2 = (n-2)(3n-1)/2. Writing u = 6n - 7 this becomes u^2 - 24 d1 d2 = 25.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "integer.hpp"
#include "symmetric.hpp"

namespace sigmaeq {

/// m-th term of f_k = 10 f_{k-1} - f_{k-2}, with f_0 = a0, f_1 = a1.
inline big_int lucas_step(const big_int& a0, const big_int& a1, std::uint64_t m)
{
    if (m == 0)
        return a0;
    big_int prev = a0, cur = a1;
    for (std::uint64_t k = 1; k < m; ++k) {
        big_int next = 10 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// (1 x (n-3), 2, x, x): the solutions with x_{n-1} = x_n.
struct equal_pair_solution {
    std::uint64_t j = 0;
    big_int n;
    big_int x;
    big_int d;
};

inline equal_pair_solution equal_pair_family(std::uint64_t j)
{
    // Y_m^2 - 24 d_m^2 = 1 with Y = f(5,49), d = f(1,10); scaling by 5 gives
    // the right-hand side 25, and Y + 7 = 0 (mod 6) needs odd m.
    const std::uint64_t m = 2 * j + 1;
    equal_pair_solution s;
    s.j = j;
    s.d = 5 * lucas_step(1, 10, m);
    const big_int y = 5 * lucas_step(5, 49, m);
    if ((y + 7) % 6 != 0)
        throw std::logic_error("equal-pair family produced non-integral n");
    s.n = (y + 7) / 6;
    s.x = s.n + s.d - 1;
    if (!is_solution<big_int>(s.n - 3, {big_int(2), s.x, s.x}))
        throw std::logic_error("equal-pair family member failed verification");
    return s;
}

struct pell_solution {
    big_int u;
    big_int t;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend bool operator==(const pell_solution&, const pell_solution&) = default;
};

struct unit_solution {
    big_int v;
    big_int w;
};

/// Least v, w > 0 with v^2 - D w^2 = 1, from the continued fraction of sqrt(D).
inline unit_solution fundamental_unit(std::uint64_t D)
{
    const std::uint64_t a0 = isqrt(D);
    if (a0 * a0 == D)
        throw std::invalid_argument("D is a perfect square");
    // sqrt(D) = [a0; a1, a2, ...] via (m + sqrt D) / q with integer m, q.
    std::uint64_t m = 0, q = 1, a = a0;
    big_int p_prev = 1, p = a0;
    big_int r_prev = 0, r = 1;
    while (p * p - big_int(D) * r * r != 1) {
        m = q * a - m;
        q = (D - m * m) / q;
        a = (a0 + m) / q;
        big_int pn = big_int(a) * p + p_prev;
        big_int rn = big_int(a) * r + r_prev;
        p_prev = std::move(p);
        p = std::move(pn);
        r_prev = std::move(r);
        r = std::move(rn);
    }
    return {p, r};
}

/// Positive solutions of u^2 - D t^2 = N (N > 0, D not a square), in
/// ascending u, up to and including `u_limit`.
inline std::vector<std::pair<big_int, big_int>> pell_general(std::uint64_t D, std::uint64_t N,
                                                             const big_int& u_limit)
{
    const unit_solution e = fundamental_unit(D);
    const big_int bD = D;

    // Every class has a representative with 0 <= t <= w sqrt(N / (2(v+1))).
    // Compare squares to stay in integers: t^2 * 2(v+1) <= w^2 N.
    std::vector<std::pair<big_int, big_int>> reps;
    for (big_int t = 0; t * t * 2 * (e.v + 1) <= e.w * e.w * N; ++t) {
        big_int u;
        if (is_square(big_int(N) + bD * t * t, u)) {
            reps.emplace_back(u, t);
            if (t != 0)
                reps.emplace_back(u, -t);
        }
    }

    std::vector<std::pair<big_int, big_int>> out;
    for (auto [u, t] : reps) {
        // Walk the orbit u + t sqrt D -> (u + t sqrt D)(v + w sqrt D).
        // u grows strictly along the orbit once it is positive.
        while (u <= u_limit) {
            if (u > 0 && t > 0)
                out.emplace_back(u, t);
            big_int nu = u * e.v + bD * t * e.w;
            big_int nt = u * e.w + t * e.v;
            u = std::move(nu);
            t = std::move(nt);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// First `count` solutions of u^2 - 24ab t^2 = 25 with t > 0 and u = 5 (mod 6),
/// ascending in u.
inline std::vector<pell_solution> pell_solve(std::uint64_t a, std::uint64_t b, std::size_t count)
{
    if (a == 0 || b == 0 || count == 0)
        throw std::invalid_argument("pell_solve needs a, b, count >= 1");
    const std::uint64_t D = checked_mul(24, checked_mul(a, b));
    if (is_square(D))
        throw std::invalid_argument("24ab is a perfect square; only finitely many solutions");

    const unit_solution e = fundamental_unit(D);
    big_int limit = 5 * e.v;
    while (true) {
        std::vector<pell_solution> out;
        for (auto& [u, t] : pell_general(D, 25, limit)) {
            if (u % 6 != 5)
                continue;
            out.push_back({u, t, a, b});
            if (out.size() == count)
                return out;
        }
        limit *= e.v;
    }
}

/// (sqrt(6ab) + 3b) / (sqrt(6ab) + 3a): the limit of z/y along pell_solve(a, b).
inline double ratio_limit(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        throw std::invalid_argument("ratio_limit needs a, b >= 1");
    const double s = std::sqrt(6.0 * static_cast<double>(a) * static_cast<double>(b));
    return (s + 3.0 * static_cast<double>(b)) / (s + 3.0 * static_cast<double>(a));
}

/// Rational bounds lo <= limit <= hi, from sqrt(6ab) bracketed to 10^-digits.
inline std::pair<big_rational, big_rational> ratio_limit_interval(std::uint64_t a, std::uint64_t b,
                                                                  unsigned digits = 40)
{
    big_int scale = 1;
    for (unsigned k = 0; k < digits; ++k)
        scale *= 10;
    const big_int r = isqrt(big_int(6) * a * b * scale * scale);
    const big_rational s_lo(r, scale), s_hi(r + 1, scale);
    auto f = [&](const big_rational& s) { return (s + 3 * b) / (s + 3 * a); };
    big_rational lo = f(s_lo), hi = f(s_hi);
    if (lo > hi)
        std::swap(lo, hi);
    return {lo, hi};
}

struct ratio_solution {
    big_int n;
    big_int y; // n + a t - 1
    big_int z; // n + b t - 1
    big_rational ratio;
    double ratio_value = 0;
};

/// Members (1 x (n-3), 2, y, z) of S_3 with d1 = a t, d2 = b t.
inline std::vector<ratio_solution> ratio_solutions(std::uint64_t a, std::uint64_t b,
                                                   std::size_t count)
{
    std::vector<ratio_solution> out;
    for (const pell_solution& p : pell_solve(a, b, count)) {
        ratio_solution r;
        r.n = (p.u + 7) / 6;
        r.y = r.n + a * p.t - 1;
        r.z = r.n + b * p.t - 1;
        r.ratio = big_rational(r.z, r.y);
        r.ratio_value = static_cast<double>(r.ratio);
        if (!is_solution<big_int>(r.n - 3, {big_int(2), r.y, r.z}))
            throw std::logic_error("Pell-generated tuple failed verification");
        out.push_back(std::move(r));
    }
    return out;
}

/// max x_n / x_{n-1} over S(n).
inline big_rational max_ratio(std::uint64_t n, unsigned jobs = 1)
{
    big_rational best = 0;
    for (const auto& c : enumerate(n, jobs)) {
        const std::size_t i = c.i();
        const big_rational r(big_int(c.tail[i - 1]), big_int(c.tail[i - 2]));
        best = std::max(best, r);
    }
    return best;
}

} // namespace sigmaeq
