//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/RandomTest.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Random.hh"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

namespace cantorflip
{
namespace test
{
namespace
{
std::vector<double> binomial_pmf(std::uint64_t n, double p)
{
    std::vector<double> pmf(n + 1);
    double const dn = static_cast<double>(n);
    for (std::uint64_t k = 0; k <= n; ++k)
    {
        double const dk = static_cast<double>(k);
        pmf[k] = std::exp(std::lgamma(dn + 1) - std::lgamma(dk + 1)
                          - std::lgamma(dn - dk + 1) + dk * std::log(p)
                          + (dn - dk) * std::log1p(-p));
    }
    return pmf;
}

//! Largest gap between empirical and exact CDF
double ks_distance(RngStream& rng, std::uint64_t n, double p, int samples)
{
    std::vector<double> counts(n + 1, 0.0);
    for (int i = 0; i < samples; ++i)
    {
        auto const k = rng.binomial(n, p);
        EXPECT_LE(k, n);
        counts[k] += 1;
    }
    auto const pmf = binomial_pmf(n, p);
    double cdf = 0;
    double ecdf = 0;
    double worst = 0;
    for (std::uint64_t k = 0; k <= n; ++k)
    {
        cdf += pmf[k];
        ecdf += counts[k] / samples;
        worst = std::max(worst, std::abs(cdf - ecdf));
    }
    return worst;
}
}  // namespace

TEST(SeedTest, derivation_is_fixed)
{
    EXPECT_EQ(trial_seed(1, 0), trial_seed(1, 0));
    EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
    EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
    EXPECT_EQ(splitmix64(1 + 0x9E3779B97F4A7C15ull), trial_seed(1, 0));
    // Reference value of the splitmix64 finalizer
    EXPECT_EQ(0xE220A8397B1DCDAFull, splitmix64(0));
}

TEST(RngStreamTest, reproducible)
{
    RngStream a(42);
    RngStream b(42);
    for (int i = 0; i < 100; ++i)
    {
        ASSERT_EQ(a.binomial(1000, 0.3), b.binomial(1000, 0.3));
        ASSERT_EQ(a.uniform(), b.uniform());
    }
}

TEST(RngStreamTest, continuous_moments)
{
    RngStream rng(7);
    int const n = 200'000;
    double sum = 0;
    double sum2 = 0;
    for (int i = 0; i < n; ++i)
    {
        double const z = rng.normal();
        sum += z;
        sum2 += z * z;
    }
    EXPECT_NEAR(0, sum / n, 0.01);
    EXPECT_NEAR(1, sum2 / n, 0.02);

    for (double shape : {0.5, 2.5, 40.0})
    {
        double s = 0;
        for (int i = 0; i < n; ++i)
            s += rng.gamma(shape);
        EXPECT_NEAR(shape, s / n, 0.02 * shape) << shape;
    }

    double s = 0;
    for (int i = 0; i < n; ++i)
    {
        double const x = rng.beta(3, 7);
        ASSERT_GT(x, 0);
        ASSERT_LT(x, 1);
        s += x;
    }
    EXPECT_NEAR(0.3, s / n, 0.003);
}

TEST(BinomialTest, edge_cases)
{
    RngStream rng(1);
    EXPECT_EQ(0u, rng.binomial(0, 0.5));
    EXPECT_EQ(0u, rng.binomial(10, 0.0));
    EXPECT_EQ(10u, rng.binomial(10, 1.0));
}

TEST(BinomialTest, inversion_regime_matches_pmf)
{
    RngStream rng(2);
    EXPECT_LT(ks_distance(rng, 20, 0.3, 100'000), 0.008);
    EXPECT_LT(ks_distance(rng, 2, 0.5, 100'000), 0.008);
    EXPECT_LT(ks_distance(rng, 500, 0.01, 100'000), 0.008);
}

TEST(BinomialTest, split_regime_matches_pmf)
{
    RngStream rng(3);
    EXPECT_LT(ks_distance(rng, 1000, 0.4, 100'000), 0.008);
    EXPECT_LT(ks_distance(rng, 301, 0.9, 100'000), 0.008);
    EXPECT_LT(ks_distance(rng, 5000, 0.5, 50'000), 0.01);
}

TEST(BinomialTest, huge_counts_moments)
{
    RngStream rng(4);
    std::uint64_t const n = std::uint64_t{1} << 50;
    double const p = 1.0 / 3;
    double const mean = static_cast<double>(n) * p;
    double const sd = std::sqrt(mean * (1 - p));
    double sum = 0;
    int const samples = 20'000;
    for (int i = 0; i < samples; ++i)
        sum += (static_cast<double>(rng.binomial(n, p)) - mean) / sd;
    EXPECT_NEAR(0, sum / samples, 0.05);
}

TEST(MultinomialTest, counts_sum_and_marginals)
{
    RngStream rng(5);
    std::vector<double> const p{0.2, 0.3, 0.5};
    std::vector<double> totals(3, 0);
    int const samples = 50'000;
    for (int i = 0; i < samples; ++i)
    {
        auto const c = rng.multinomial(40, p);
        ASSERT_EQ(3u, c.size());
        ASSERT_EQ(40u, std::accumulate(c.begin(), c.end(), std::uint64_t{0}));
        for (std::size_t j = 0; j < 3; ++j)
            totals[j] += static_cast<double>(c[j]);
    }
    for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(40 * p[j], totals[j] / samples, 0.05);

    auto const big = rng.multinomial(std::uint64_t{1} << 60, p);
    EXPECT_EQ(std::uint64_t{1} << 60,
              std::accumulate(big.begin(), big.end(), std::uint64_t{0}));
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace cantorflip
