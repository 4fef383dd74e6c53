#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmaeq;

TEST(Bounds, SmallN)
{
    const auto b = bounds_for(3);
    EXPECT_EQ(b.prefix_product_max, 3u);
    EXPECT_EQ(b.i_max, 3u);
    EXPECT_EQ(b.xn_max, 6u);
    EXPECT_EQ(b.m_max, 36u);
    EXPECT_EQ(b.xn2_max, 3u);

    EXPECT_EQ(bounds_for(16).xn_max, 344u);
    EXPECT_EQ(bounds_for(16).m_max, 11008u);
    EXPECT_EQ(bounds_for(5).xn2_max, 5u);
}

TEST(Bounds, RejectsShortTuples)
{
    EXPECT_THROW(bounds_for(2), std::invalid_argument);
    EXPECT_THROW(xn2_bound(0), std::invalid_argument);
    EXPECT_THROW(i_bound(1), std::invalid_argument);
}

TEST(Bounds, OverflowIsReported)
{
    EXPECT_THROW(bounds_for(std::uint64_t(1) << 40), std::overflow_error);
}

TEST(Bounds, ForcedOnes)
{
    EXPECT_EQ(forced_ones(3), 0u);
    EXPECT_EQ(forced_ones(5), 0u);
    EXPECT_EQ(forced_ones(6), 1u);
    EXPECT_EQ(forced_ones(8), 2u);
}

TEST(Bounds, IBoundIsLargestPowerFit)
{
    for (std::uint64_t n = 3; n <= 5000; ++n) {
        const std::uint64_t c = n * (n - 1) / 2;
        const std::uint64_t i = i_bound(n);
        ASSERT_LE(std::uint64_t(1) << (i - 2), c);
        ASSERT_GT(std::uint64_t(1) << (i - 1), c);
    }
}

TEST(Bounds, Xn2IsExactCubeRootFloor)
{
    for (std::uint64_t n = 3; n <= 1000000; ++n) {
        const unsigned __int128 k = n - 2;
        const unsigned __int128 v = 8 * k * k;
        const unsigned __int128 r = xn2_bound(n) - 1;
        ASSERT_TRUE(r * r * r <= v && (r + 1) * (r + 1) * (r + 1) > v) << n;
    }
}

TEST(ProofInequalities, Examples)
{
    const auto a = *is_solution<std::uint64_t>(8, {7, 7, 7}).solution;
    EXPECT_TRUE(check_proof_inequalities(a).all());
    const auto b = *is_solution<std::uint64_t>(0, {2, 3, 6}).solution;
    EXPECT_TRUE(check_proof_inequalities(b).all());
    const auto c = *is_solution<std::uint64_t>(13, {2, 16, 344}).solution;
    EXPECT_TRUE(check_proof_inequalities(c).all());
}

TEST(ProofInequalities, PrefixSumIsTightForSevens)
{
    // prefix (1 x 8, 7): s1 = 15 and n - 3 + prod = 15
    const auto a = *is_solution<std::uint64_t>(8, {7, 7, 7}).solution;
    const auto x = split_sigma2(8, eval_sigmas(std::vector<std::uint64_t>{7}));
    EXPECT_EQ(x.s1, 15);
    EXPECT_TRUE(check_proof_inequalities(a).prefix_sum);
}

TEST(ProofInequalities, HoldOnEveryGoldenSolution)
{
    for (const auto& [n, sols] : sigmaeq::testing::load_golden_solutions())
        for (const auto& c : sols)
            ASSERT_TRUE(check_proof_inequalities(c).all()) << "n=" << n;
}

TEST(ProofInequalities, RejectsTooFewNonOnes)
{
    compact_solution c;
    c.n = 4;
    c.ones = 2;
    c.tail = {2, 3};
    EXPECT_THROW(check_proof_inequalities(c), std::invalid_argument);
}

TEST(CheckBounds, GoldenSolutions)
{
    for (const auto& [n, sols] : sigmaeq::testing::load_golden_solutions()) {
        for (const auto& c : sols) {
            const auto v = is_solution<std::uint64_t>(c.ones, c.tail);
            ASSERT_TRUE(v);
            ASSERT_TRUE(check_bounds(*v.solution).all()) << "n=" << n;
        }
    }
}
