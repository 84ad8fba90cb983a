//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Random.hh
//! \brief Portable RNG stream and exact discrete samplers.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cantorflip
{
//---------------------------------------------------------------------------//
//! One step of the SplitMix64 output function.
std::uint64_t splitmix64(std::uint64_t x);

/*!
 * Seed of trial \c t derived from the master seed.
 *
 * seed_t = splitmix64(master + (t + 1) * 0x9E3779B97F4A7C15). Every trial
 * owns an independent stream, so results do not depend on which thread
 * runs which trial.
 */
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

//---------------------------------------------------------------------------//
/*!
 * Random stream with library-independent variates.
 *
 * The engine (mt19937_64) is fully specified by the standard; the variate
 * transformations below are implemented here rather than taken from
 * <random> distributions, whose algorithms differ between standard
 * libraries.
 */
class RngStream
{
  public:
    using engine_type = std::mt19937_64;

    explicit RngStream(std::uint64_t seed) : engine_{seed} {}

    // Uniform on [0,1) with 53 random bits
    double uniform();

    // Standard normal (Marsaglia polar method)
    double normal();

    // Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang)
    double gamma(double shape);

    // Beta(a, b) for a, b >= 1
    double beta(double a, double b);

    // Exact Binomial(trials, prob)
    std::uint64_t binomial(std::uint64_t trials, double prob);

    // Exact Multinomial(trials, probs) by sequential binomial splits
    std::vector<std::uint64_t>
    multinomial(std::uint64_t trials, std::span<double const> probs);

  private:
    engine_type engine_;
    double spare_normal_{0};
    bool has_spare_{false};
};

//! Mean count n*min(p,1-p) below which binomials are sampled by inversion.
inline constexpr double binomial_inversion_threshold = 30.0;

//---------------------------------------------------------------------------//
}  // namespace cantorflip
