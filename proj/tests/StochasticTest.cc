//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/StochasticTest.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Stochastic.hh"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "cantorflip/Errors.hh"
#include "cantorflip/Exact.hh"

namespace cantorflip
{
namespace test
{
namespace
{
double const third = 1.0 / 3;

std::uint64_t ipow(std::uint64_t base, int exp)
{
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i)
        result *= base;
    return result;
}

//! Least-squares slope of log(values) over [first, last], scaled by -log r
double reference_slope(std::vector<double> const& values,
                       int first,
                       int last,
                       double ratio)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double const count = last - first + 1;
    for (int n = first; n <= last; ++n)
    {
        double const y = std::log(values[static_cast<std::size_t>(n)]);
        sx += n;
        sy += y;
        sxx += double(n) * n;
        sxy += n * y;
    }
    double const slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    return slope / -std::log(ratio);
}
}  // namespace

//---------------------------------------------------------------------------//
TEST(PeriodicSourceTest, labels)
{
    PeriodicSource const src{3, 2};
    for (std::uint64_t k = 0; k < 30; ++k)
        EXPECT_EQ(k % 3 == 2 ? 2 : 1, src.label(EdgeIndex{k})) << k;
}

TEST(OccupancyTest, construction)
{
    auto const root = OccupancyMap::root(2);
    EXPECT_EQ(1u, z_n(root));
    EXPECT_EQ(1u, root.total_paths());
    EXPECT_TRUE(root.word(root.entries()[0]).empty());

    OccupancyMap const occ(3, 2, {{5, 2}, {0, 0}, {1, 7}});
    ASSERT_EQ(2u, z_n(occ));
    EXPECT_EQ(1u, occ.entries()[0].code);
    EXPECT_EQ(LabelWord(3, {1, 2}), occ.word(occ.entries()[0]));
    EXPECT_EQ(LabelWord(3, {2, 3}), occ.word(occ.entries()[1]));

    EXPECT_THROW(OccupancyMap(2, 1, {{0, 1}, {0, 1}}), ValidationError);
    EXPECT_THROW(OccupancyMap(1, 0, {}), ValidationError);
}

TEST(EvolveTest, root_step)
{
    auto const half = ProbVector::uniform(2);
    RngStream rng(11);
    for (int i = 0; i < 100; ++i)
    {
        auto const occ = evolve(OccupancyMap::root(2), half, 2, rng);
        EXPECT_EQ(1, occ.level());
        EXPECT_EQ(2u, occ.total_paths());
        EXPECT_GE(z_n(occ), 1u);
        EXPECT_LE(z_n(occ), 2u);
    }
    EXPECT_THROW(evolve(OccupancyMap::root(3), half, 2, rng), ValidationError);
    EXPECT_THROW(evolve(OccupancyMap::root(2), half, 1, rng), ValidationError);
}

TEST(EvolveTest, conservation_and_growth_bounds)
{
    for (auto const& [probs, arity] :
         {std::pair{ProbVector::uniform(2), 2},
          std::pair{ProbVector::binary(third), 2},
          std::pair{ProbVector({0.2, 0.3, 0.5}), 2},
          std::pair{ProbVector::uniform(2), 3},
          std::pair{ProbVector({0.05, 0.2, 0.75}), 4}})
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed)
        {
            RngStream rng(seed);
            auto occ = OccupancyMap::root(probs.size());
            auto const n_labels = static_cast<std::uint64_t>(probs.size());
            for (int level = 1; level <= 12; ++level)
            {
                auto next = evolve(occ, probs, arity, rng);
                auto const m_n = ipow(static_cast<std::uint64_t>(arity), level);
                ASSERT_EQ(m_n, next.total_paths());
                ASSERT_LE(z_n(next), std::min(n_labels * z_n(occ), m_n));
                ASSERT_LE(z_n(next), ipow(n_labels, level));

                auto const mu = measure(next);
                ASSERT_EQ(m_n, mu.denominator);
                ASSERT_EQ(mu.denominator,
                          std::accumulate(mu.numerators.begin(),
                                          mu.numerators.end(),
                                          std::uint64_t{0}));
                occ = std::move(next);
            }
        }
    }
}

TEST(EvolveTest, depth_limit)
{
    auto const half = ProbVector::uniform(2);
    RngStream rng(1);
    OccupancyMap const deep(2, 62, {{0, std::uint64_t{1} << 62}});
    EXPECT_THROW(evolve(deep, half, 2, rng), BudgetError);
    EXPECT_THROW(simulate_trace(half, 2, 63, 1), BudgetError);
}

TEST(MeasureTest, examples)
{
    auto const root = measure(OccupancyMap::root(2));
    ASSERT_EQ(1u, root.words.size());
    EXPECT_TRUE(root.words[0].empty());
    EXPECT_EQ(1.0, root.weight(0));

    auto const lopsided = measure(OccupancyMap(2, 1, {{0, 2}, {1, 0}}));
    ASSERT_EQ(1u, lopsided.words.size());
    EXPECT_EQ(LabelWord(2, {1}), lopsided.words[0]);
    EXPECT_EQ(1.0, lopsided.weight(0));
}

//---------------------------------------------------------------------------//
TEST(TrialsTest, determinism_and_thread_invariance)
{
    auto const spec = canonical_spec(2, third);
    auto const probs = ProbVector::binary(third);
    TrialOptions opts;
    opts.depth = 10;
    opts.trials = 37;
    opts.master_seed = 9;
    opts.keep_traces = true;
    auto const serial = run_trials(spec, probs, opts);
    for (unsigned int threads : {2u, 3u, 8u})
    {
        opts.threads = threads;
        auto const parallel = run_trials(spec, probs, opts);
        EXPECT_EQ(serial.traces, parallel.traces);
        for (std::size_t l = 0; l < serial.levels.size(); ++l)
        {
            EXPECT_EQ(serial.levels[l].mean, parallel.levels[l].mean);
            EXPECT_EQ(serial.levels[l].variance, parallel.levels[l].variance);
        }
    }
    EXPECT_EQ(simulate_trace(probs, 2, 10, 5), simulate_trace(probs, 2, 10, 5));

    TrialOptions one;
    one.trials = 1;
    one.depth = 12;
    one.keep_traces = true;
    EXPECT_EQ(run_trials(spec, probs, one).traces,
              run_trials(spec, probs, one).traces);
}

TEST(TrialsTest, validation_and_budget)
{
    auto const spec = canonical_spec(2, third);
    TrialOptions opts;
    EXPECT_THROW(run_trials(spec, ProbVector::uniform(3), opts),
                 ValidationError);
    opts.trials = 0;
    EXPECT_THROW(run_trials(spec, ProbVector::uniform(2), opts),
                 ValidationError);
    opts.trials = trial_budget;
    EXPECT_THROW(run_trials(spec, ProbVector::uniform(2), opts), BudgetError);
}

TEST(TrialsTest, symmetric_mean_matches_pi_recursion)
{
    auto const half = ProbVector::uniform(2);
    TrialOptions opts;
    opts.depth = 8;
    opts.trials = 10'000;
    opts.master_seed = 2024;
    opts.threads = 4;
    auto const result = run_trials(canonical_spec(2, third), half, opts);
    double const expected = 256 * pi_sequence(2, 2, 8).values[8];
    EXPECT_NEAR(76.8914, expected, 1e-4);
    auto const& z8 = result.levels[8];
    double const se = std::sqrt(z8.variance / 10'000);
    EXPECT_LT(std::abs(z8.mean - expected), 3 * se)
        << "mean " << z8.mean << " expected " << expected << " se " << se;
    EXPECT_NEAR(39.0 / 16, result.levels[2].mean, 0.05);
}

TEST(TrialsTest, three_ary_mean_matches_recursion)
{
    auto const half = ProbVector::uniform(2);
    TrialOptions opts;
    opts.arity = 3;
    opts.depth = 6;
    opts.trials = 10'000;
    opts.master_seed = 77;
    opts.threads = 4;
    auto const result = run_trials(canonical_spec(2, third), half, opts);
    double const expected = expected_zn(half, 3, 6);
    auto const& z6 = result.levels[6];
    double const se = std::sqrt(z6.variance / 10'000);
    EXPECT_LT(std::abs(z6.mean - expected), 3 * se)
        << "mean " << z6.mean << " expected " << expected << " se " << se;
}

TEST(TrialsTest, distribution_matches_enumeration)
{
    for (double p : {0.5, third})
    {
        auto const probs = ProbVector::binary(p);
        TrialOptions opts;
        opts.depth = 3;
        opts.trials = 100'000;
        opts.master_seed = 31;
        opts.threads = 4;
        opts.keep_traces = true;
        auto const result = run_trials(canonical_spec(2, third), probs, opts);
        for (int n = 1; n <= 3; ++n)
        {
            auto const exact = zn_distribution_bruteforce(probs, 2, n);
            std::vector<double> empirical(exact.size(), 0.0);
            for (auto const& trace : result.traces)
            {
                auto const z = trace[static_cast<std::size_t>(n)];
                ASSERT_LT(z, empirical.size());
                empirical[z] += 1.0 / opts.trials;
            }
            double tv = 0;
            for (std::size_t z = 0; z < exact.size(); ++z)
                tv += std::abs(exact[z] - empirical[z]);
            EXPECT_LT(tv / 2, 0.01) << "p=" << p << " n=" << n;
        }
    }
}

TEST(TrialsTest, nearly_degenerate_labels)
{
    ProbVector const probs({1 - 1e-6, 1e-6});
    TrialOptions opts;
    opts.depth = 10;
    opts.trials = 2000;
    opts.keep_traces = true;
    auto const result = run_trials(canonical_spec(2, third), probs, opts);
    auto const ones = std::count_if(
        result.traces.begin(), result.traces.end(), [](auto const& t) {
            return t.back() == 1;
        });
    EXPECT_GT(static_cast<double>(ones) / 2000, 0.99);
}

//---------------------------------------------------------------------------//
TEST(EstimateDimTest, examples)
{
    std::vector<double> geometric(21);
    for (std::size_t n = 0; n < geometric.size(); ++n)
        geometric[n] = std::ldexp(1.0, static_cast<int>(n));
    EXPECT_NEAR(std::log(2.0) / std::log(3.0),
                estimate_dim(geometric, third, {10, 20}),
                1e-12);

    std::vector<double> const flat(21, 1.0);
    EXPECT_NEAR(0, estimate_dim(flat, third, {10, 20}), 1e-15);

    EXPECT_THROW(estimate_dim(flat, third, {10, 10}), ValidationError);
    EXPECT_THROW(estimate_dim(flat, third, {10, 21}), ValidationError);
    std::vector<double> const zeros(21, 0.0);
    EXPECT_THROW(estimate_dim(zeros, third, {1, 5}), ValidationError);
}

TEST(EstimateDimTest, symmetric_simulation_tracks_expected_growth)
{
    auto const half = ProbVector::uniform(2);
    TrialOptions opts;
    opts.depth = 20;
    opts.trials = 100;
    opts.master_seed = 1;
    opts.threads = 4;
    auto const result = run_trials(canonical_spec(2, third), half, opts);
    std::vector<double> means;
    for (auto const& s : result.levels)
        means.push_back(s.mean);
    double const simulated = estimate_dim(means, third, {10, 20});

    // Slope of the exact expectation 2^n pi_n over the same window
    auto const seq = pi_sequence(2, 2, 20);
    std::vector<double> expected;
    for (int n = 0; n <= 20; ++n)
        expected.push_back(std::ldexp(seq.values[static_cast<std::size_t>(n)],
                                      n));
    double const oracle = reference_slope(expected, 10, 20, third);
    EXPECT_NEAR(oracle, simulated, 0.01);
    EXPECT_LT(simulated, std::log(2.0) / std::log(3.0));
}

TEST(EstimateDimTest, supercritical_arity_reaches_dim_C)
{
    auto const half = ProbVector::uniform(2);
    TrialOptions opts;
    opts.arity = 3;
    opts.depth = 20;
    opts.trials = 50;
    opts.master_seed = 3;
    opts.threads = 4;
    auto const result = run_trials(canonical_spec(2, third), half, opts);
    std::vector<double> means;
    for (auto const& s : result.levels)
        means.push_back(s.mean);
    EXPECT_NEAR(std::log(2.0) / std::log(3.0),
                estimate_dim(means, third, {10, 20}),
                0.03);
}

//---------------------------------------------------------------------------//
TEST(EnergyTest, examples)
{
    auto const spec = canonical_spec(2, third);
    EXPECT_EQ(0, energy_estimate(OccupancyMap::root(2), spec, 0.5));
    EXPECT_EQ(0, energy_estimate(OccupancyMap(2, 1, {{1, 2}}), spec, 0.5));

    // Midpoints 1/6 and 5/6
    double const d = 2.0 / 3;
    for (double t : {0.3, 0.5, 0.9})
    {
        EXPECT_NEAR(2 * 0.25 * std::pow(d, -t),
                    energy_estimate(OccupancyMap(2, 1, {{0, 1}, {1, 1}}),
                                    spec,
                                    t),
                    1e-14);
    }
    EXPECT_THROW(energy_estimate(OccupancyMap::root(2), spec, 0),
                 ValidationError);
}

TEST(EnergyTest, bounded_across_levels)
{
    auto const spec = canonical_spec(2, third);
    auto const half = ProbVector::uniform(2);
    double const t = 0.5 * std::log(2.0) / std::log(3.0);
    for (std::uint64_t seed : {1u, 2u, 3u})
    {
        RngStream rng(seed);
        auto occ = OccupancyMap::root(2);
        std::vector<double> energies;
        for (int level = 1; level <= 14; ++level)
        {
            occ = evolve(occ, half, 2, rng);
            if (level >= 6)
                energies.push_back(energy_estimate(occ, spec, t));
        }
        auto const [lo, hi] = std::minmax_element(energies.begin(),
                                                  energies.end());
        ASSERT_GT(*lo, 0);
        EXPECT_LT(*hi / *lo, 3) << "seed " << seed;
    }
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace cantorflip
