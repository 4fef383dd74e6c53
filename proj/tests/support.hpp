#pragma once

// Test-only helpers: fixture loading and naive oracles that share no code
// with the library's fast paths.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sigmaeq/sigmaeq.hpp>

namespace sigmaeq::testing {

inline std::string data_path(const std::string& name)
{
    return std::string(SIGMAEQ_TEST_DATA) + "/" + name;
}

/// solutions_n3_16.txt, keyed by n, each list in file order.
inline std::map<std::uint64_t, std::vector<compact_solution>> load_golden_solutions()
{
    std::ifstream in(data_path("solutions_n3_16.txt"));
    if (!in)
        throw std::runtime_error("cannot open golden solution fixture");
    std::map<std::uint64_t, std::vector<compact_solution>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        compact_solution c;
        std::string tail;
        ls >> c.n >> c.ones >> tail;
        std::istringstream ts(tail);
        for (std::string tok; std::getline(ts, tok, ',');)
            c.tail.push_back(std::stoull(tok));
        out[c.n].push_back(std::move(c));
    }
    return out;
}

/// Lines of "key value" pairs, '#' comments skipped.
inline std::map<std::string, std::string> load_key_values(const std::string& name)
{
    std::ifstream in(data_path(name));
    if (!in)
        throw std::runtime_error("cannot open fixture " + name);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string k, v;
        ls >> k >> v;
        out[k] = v;
    }
    return out;
}

struct equal_pair_row {
    std::uint64_t j = 0;
    big_int n, x;
};

inline std::vector<equal_pair_row> load_equal_pair_family()
{
    std::ifstream in(data_path("equal_pair_family.txt"));
    if (!in)
        throw std::runtime_error("cannot open equal-pair fixture");
    std::vector<equal_pair_row> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string n, x;
        equal_pair_row r;
        ls >> r.j >> n >> x;
        r.n = big_int(n);
        r.x = big_int(x);
        out.push_back(std::move(r));
    }
    return out;
}

struct naive_sigmas {
    big_int s1 = 0, s2 = 0, prod = 1;
};

/// Pairwise double loop; O(n^2) on purpose.
inline naive_sigmas pairwise_sigmas(std::span<const std::uint64_t> xs)
{
    naive_sigmas r;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        r.s1 += xs[a];
        r.prod *= xs[a];
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            r.s2 += big_int(xs[a]) * xs[b];
    }
    return r;
}

inline bool naive_is_solution(std::span<const std::uint64_t> xs)
{
    const naive_sigmas s = pairwise_sigmas(xs);
    return s.s2 == s.prod;
}

inline std::vector<std::uint64_t> naive_divisors(std::uint64_t v)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= v; ++d)
        if (v % d == 0)
            out.push_back(d);
    return out;
}

/// (u, t) with u^2 - D t^2 = 25, t in [1, t_max], u = 5 (mod 6), by direct
/// search. D t_max^2 must fit in 64 bits.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>>
brute_pell(std::uint64_t D, std::uint64_t t_max)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        const std::uint64_t rhs = D * t * t + 25;
        auto u = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(rhs)));
        while (u * u > rhs)
            --u;
        while ((u + 1) * (u + 1) <= rhs)
            ++u;
        if (u * u != rhs)
            continue;
        if (u % 6 == 5)
            out.emplace_back(u, t);
    }
    return out;
}

} // namespace sigmaeq::testing
