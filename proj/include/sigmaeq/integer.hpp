#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigmaeq {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

template <class Int>
inline constexpr bool is_big_v = std::is_same_v<Int, big_int>;

inline big_int to_big(std::uint64_t v) { return big_int(v); }
inline const big_int& to_big(const big_int& v) { return v; }

// True iff v fits in uint64; stores the narrowed value in out.
inline bool fits_u64(const big_int& v, std::uint64_t& out)
{
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        return false;
    out = static_cast<std::uint64_t>(v);
    return true;
}

inline std::uint64_t narrow_u64(const big_int& v)
{
    std::uint64_t out = 0;
    if (!fits_u64(v, out))
        throw std::overflow_error("value does not fit in 64 bits");
    return out;
}

template <class Int>
Int from_big(const big_int& v)
{
    if constexpr (is_big_v<Int>)
        return v;
    else
        return narrow_u64(v);
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit addition overflow");
    return r;
}

/// Largest r with r*r <= v.
inline std::uint64_t isqrt(std::uint64_t v)
{
    if (v < 2)
        return v;
    // Newton from above; converges monotonically for integers.
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(v) + 1) / 2);
    while (true) {
        std::uint64_t y = (x + v / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}

inline big_int isqrt(const big_int& v)
{
    if (v < 0)
        throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

inline bool is_square(const big_int& v, big_int& root)
{
    if (v < 0)
        return false;
    root = isqrt(v);
    return root * root == v;
}

inline bool is_square(std::uint64_t v)
{
    const std::uint64_t r = isqrt(v);
    return r * r == v;
}

/// Largest r with r*r*r <= v.
inline std::uint64_t icbrt(std::uint64_t v)
{
    std::uint64_t lo = 0;
    std::uint64_t hi = std::uint64_t{1} << 22; // (2^22)^3 > 2^64
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        const unsigned __int128 cube = static_cast<unsigned __int128>(mid) * mid * mid;
        if (cube <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline big_int binomial2(const big_int& k)
{
    return k * (k - 1) / 2;
}

} // namespace sigmaeq
