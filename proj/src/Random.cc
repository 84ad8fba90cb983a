//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Random.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Random.hh"

#include <cmath>

namespace cantorflip
{
//---------------------------------------------------------------------------//
std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial)
{
    return splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15ull);
}

//---------------------------------------------------------------------------//
double RngStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do
    {
        u = 2 * this->uniform() - 1;
        v = 2 * this->uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    double const scale = std::sqrt(-2 * std::log(s) / s);
    spare_normal_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

double RngStream::gamma(double shape)
{
    if (shape < 1)
    {
        // Boost: Gamma(a) = Gamma(a + 1) * U^(1/a)
        double const g = this->gamma(shape + 1);
        double u;
        do
        {
            u = this->uniform();
        } while (u == 0);
        return g * std::pow(u, 1 / shape);
    }
    double const d = shape - 1.0 / 3;
    double const c = 1 / std::sqrt(9 * d);
    while (true)
    {
        double x, v;
        do
        {
            x = this->normal();
            v = 1 + c * x;
        } while (v <= 0);
        v = v * v * v;
        double const u = this->uniform();
        if (u < 1 - 0.0331 * x * x * x * x)
        {
            return d * v;
        }
        if (u > 0 && std::log(u) < 0.5 * x * x + d * (1 - v + std::log(v)))
        {
            return d * v;
        }
    }
}

double RngStream::beta(double a, double b)
{
    double const x = this->gamma(a);
    double const y = this->gamma(b);
    return x / (x + y);
}

//---------------------------------------------------------------------------//
/*!
 * Exact binomial variate.
 *
 * Small means use sequential inversion of the pmf. Larger counts use the
 * order-statistic split: the a-th smallest of n uniforms is Beta(a, n-a+1)
 * distributed, and conditioning on it leaves two smaller binomials with
 * rescaled probabilities. Both routes are exact up to floating point.
 */
std::uint64_t RngStream::binomial(std::uint64_t trials, double prob)
{
    if (trials == 0 || prob <= 0)
    {
        return 0;
    }
    if (prob >= 1)
    {
        return trials;
    }
    if (prob > 0.5)
    {
        return trials - this->binomial(trials, 1 - prob);
    }

    auto const n = static_cast<double>(trials);
    if (n * prob < binomial_inversion_threshold)
    {
        double const ratio = prob / (1 - prob);
        double f = std::exp(n * std::log1p(-prob));
        double u = this->uniform();
        std::uint64_t k = 0;
        while (u >= f && k < trials)
        {
            u -= f;
            ++k;
            f *= ratio * static_cast<double>(trials - k + 1)
                 / static_cast<double>(k);
        }
        return k;
    }

    std::uint64_t const a = trials / 2 + 1;
    std::uint64_t const b = trials - a + 1;
    double const x
        = this->beta(static_cast<double>(a), static_cast<double>(b));
    if (x >= prob)
    {
        return this->binomial(a - 1, prob / x);
    }
    return a + this->binomial(b - 1, (prob - x) / (1 - x));
}

//---------------------------------------------------------------------------//
std::vector<std::uint64_t>
RngStream::multinomial(std::uint64_t trials, std::span<double const> probs)
{
    std::vector<std::uint64_t> result(probs.size(), 0);
    double remaining_mass = 1;
    std::uint64_t remaining = trials;
    for (std::size_t i = 0; i + 1 < probs.size() && remaining > 0; ++i)
    {
        double const cond
            = remaining_mass > 0 ? probs[i] / remaining_mass : 1.0;
        result[i] = this->binomial(remaining, cond);
        remaining -= result[i];
        remaining_mass -= probs[i];
    }
    if (!probs.empty())
    {
        result.back() += remaining;
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
