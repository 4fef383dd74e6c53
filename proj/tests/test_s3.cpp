#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmaeq;

TEST(F3, Examples)
{
    EXPECT_EQ(f3(5, 3), 39u);
    EXPECT_EQ(f3(3, 2), 4u);
    EXPECT_EQ(f3(11, 2), 144u);
    EXPECT_EQ(f3(5, 2), 21u);
    EXPECT_THROW(f3(2, 2), std::invalid_argument);
    EXPECT_THROW(f3(5, 1), std::invalid_argument);
}

TEST(F3, XEqualsTwoClosedForm)
{
    for (std::uint64_t n = 3; n <= 300; ++n)
        ASSERT_EQ(2 * f3(n, 2), (n - 2) * (3 * n - 1)) << n;
}

TEST(S3Enumerate, ElevenHasEightWithXTwo)
{
    std::vector<std::uint64_t> d1s;
    for (const auto& s : s3_enumerate(11))
        if (s.x == 2)
            d1s.push_back(s.d1);
    EXPECT_EQ(d1s, (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12}));
}

TEST(S3Enumerate, TwelveHasNoXThree)
{
    for (const auto& s : s3_enumerate(12))
        EXPECT_NE(s.x, 3u);
}

TEST(S3Enumerate, Count299)
{
    EXPECT_EQ(s3_enumerate(299).size(), 213u);
}

TEST(S3Enumerate, SmallCounts)
{
    // n = 5 has four members in the complete S(5) list: (2,5,25), (2,7,11),
    // (3,3,22), (3,4,9).
    const std::vector<std::pair<std::uint64_t, std::size_t>> want = {
        {3, 3}, {5, 4}, {6, 4}, {7, 6}, {8, 3}};
    for (const auto& [n, count] : want)
        EXPECT_EQ(s3_enumerate(n).size(), count) << "n=" << n;
}

TEST(S3Enumerate, LowerBound)
{
    EXPECT_EQ(s3_lower_bound(11), 8u);
    EXPECT_EQ(s3_lower_bound(3), 2u);
    EXPECT_EQ(s3_lower_bound(5), 2u);
    for (std::uint64_t n = 3; n <= 300; ++n)
        ASSERT_GE(s3_enumerate(n).size(), s3_lower_bound(n)) << n;
}

TEST(S3Enumerate, AgreesWithIThreeSlice)
{
    for (std::uint64_t n = 3; n <= 16; ++n) {
        std::vector<compact_solution> slice;
        for (const auto& c : enumerate(n))
            if (c.i() == 3)
                slice.push_back(c);
        std::vector<compact_solution> got;
        for (const auto& s : s3_enumerate(n))
            got.push_back(s.to_compact());
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, slice) << "n=" << n;
    }
}

TEST(S3Enumerate, EntriesAndDivisorsConsistent)
{
    for (std::uint64_t n = 3; n <= 120; ++n) {
        for (const auto& s : s3_enumerate(n)) {
            ASSERT_LE(s.x, s.y);
            ASSERT_LE(s.y, s.z);
            ASSERT_EQ(s.d1 * s.d2, f3(n, s.x));
            std::vector<std::uint64_t> xs(n - 3, 1);
            xs.insert(xs.end(), {s.x, s.y, s.z});
            ASSERT_TRUE(sigmaeq::testing::naive_is_solution(xs));
        }
    }
}

TEST(S3Enumerate, XThreeIffNotDivisibleByFour)
{
    for (std::uint64_t n = 3; n <= 300; ++n) {
        const auto sols = s3_enumerate(n);
        const bool has3 = std::any_of(sols.begin(), sols.end(),
                                      [](const auto& s) { return s.x == 3; });
        ASSERT_EQ(has3, n % 4 != 0) << n;
    }
}

TEST(CanonicalFamilies, Examples)
{
    auto tails = [](std::uint64_t n) {
        std::vector<std::array<std::uint64_t, 3>> out;
        for (const auto& s : canonical_families(n))
            out.push_back({s.x, s.y, s.z});
        return out;
    };
    using t3 = std::array<std::uint64_t, 3>;
    EXPECT_EQ(tails(9), (std::vector<t3>{{2, 9, 99}, {2, 15, 21}, {3, 8, 15}}));
    EXPECT_EQ(tails(12), (std::vector<t3>{{2, 12, 186}, {2, 16, 46}, {4, 6, 30}}));
    EXPECT_EQ(tails(3), (std::vector<t3>{{2, 3, 6}}));
    EXPECT_THROW(canonical_families(4), std::invalid_argument);
    EXPECT_THROW(canonical_families(2), std::invalid_argument);
}

TEST(CanonicalFamilies, ContainedInS3)
{
    for (std::uint64_t n = 5; n <= 300; ++n) {
        const auto fam = canonical_families(n);
        ASSERT_EQ(fam.size(), 3u) << n;
        const auto all = s3_enumerate(n);
        for (const auto& s : fam)
            ASSERT_NE(std::find(all.begin(), all.end(), s), all.end()) << n;
    }
}

TEST(ParametricFamily, AAtTwo)
{
    const auto r = parametric_family(cubic_family::a, 2);
    EXPECT_EQ(r.solution.n, 296354);
    EXPECT_EQ(r.solution.x, 3496);
    EXPECT_EQ(r.solution.y, 3529);
    EXPECT_EQ(r.solution.z, 3823);
    EXPECT_TRUE(r.ordered);
    EXPECT_TRUE(r.verified);
}

TEST(ParametricFamily, AAtOneIsUnordered)
{
    const auto r = parametric_family(cubic_family::a, 1);
    EXPECT_EQ(r.solution.x, 82);
    EXPECT_EQ(r.solution.y, 73);
    EXPECT_FALSE(r.ordered);
    EXPECT_TRUE(r.verified);
}

TEST(ParametricFamily, AVerifiesForManyK)
{
    for (std::int64_t k = 1; k <= 30; ++k) {
        const auto r = parametric_family(cubic_family::a, k);
        ASSERT_TRUE(r.verified) << k;
        ASSERT_EQ(r.solution.n - 2, 4 * r.q * r.q * r.q);
        ASSERT_EQ(r.solution.y, 2 * r.q * r.q + 1);
        if (k >= 2) {
            ASSERT_TRUE(r.ordered) << k;
        }
    }
}

TEST(ParametricFamily, BIdentities)
{
    for (std::int64_t k = 2; k <= 30; ++k) {
        const auto r = parametric_family(cubic_family::b, k);
        ASSERT_TRUE(r.verified) << k;
        const big_int& q = r.q;
        ASSERT_EQ(r.solution.x, 2 * q * q + 1);
        ASSERT_EQ(r.solution.n - 2, 4 * q * q * q);
        const big_int xm1 = r.solution.x - 1;
        ASSERT_EQ(2 * xm1 * xm1 * xm1, (r.solution.n - 2) * (r.solution.n - 2));

        // b at k is a at k - 1 with the entries permuted.
        const auto a = parametric_family(cubic_family::a, k - 1);
        std::array<big_int, 3> sb{r.solution.x, r.solution.y, r.solution.z};
        std::array<big_int, 3> sa{a.solution.x, a.solution.y, a.solution.z};
        std::sort(sb.begin(), sb.end());
        std::sort(sa.begin(), sa.end());
        ASSERT_EQ(sb, sa);
        ASSERT_EQ(r.solution.n, a.solution.n);
        ASSERT_FALSE(r.ordered);
    }
}

TEST(ParametricFamily, InadmissibleK)
{
    EXPECT_THROW(parametric_family(cubic_family::a, 0), std::domain_error);
}
