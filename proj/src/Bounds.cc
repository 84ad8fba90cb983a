//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Bounds.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Bounds.hh"

#include <algorithm>
#include <cmath>
#include <string>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
// Relative slack when comparing M against the sandwich thresholds
constexpr double threshold_tol = 1e-12;

void check_inputs(int arity, double ratio)
{
    if (arity < 2)
    {
        throw ValidationError("tree arity must be at least 2");
    }
    if (!(ratio > 0 && ratio < 1))
    {
        throw ValidationError("contraction ratio must lie in (0,1)");
    }
}

double sum_of_squares(ProbVector const& probs)
{
    double total = 0;
    for (double p : probs.values())
    {
        total += p * p;
    }
    return total;
}
}  // namespace

//---------------------------------------------------------------------------//
double lower_bound(ProbVector const& probs, int arity, double ratio)
{
    check_inputs(arity, ratio);
    double const log_r = std::log(ratio);
    return std::min(-std::log(static_cast<double>(arity)) / log_r,
                    std::log(sum_of_squares(probs)) / log_r);
}

//---------------------------------------------------------------------------//
SandwichResult sandwich_check(ProbVector const& probs, int arity)
{
    double entropy = 0;
    double sum_log = 0;
    for (double p : probs.values())
    {
        entropy -= p * std::log(p);
        sum_log += std::log(p);
    }
    SandwichResult result;
    result.entropy_threshold = std::exp(entropy);
    result.geometric_threshold = std::exp(-sum_log / probs.size());

    auto const m = static_cast<double>(arity);
    if (m < result.entropy_threshold * (1 - threshold_tol))
    {
        result.status = Sandwich::below;
    }
    else if (m > result.geometric_threshold * (1 + threshold_tol))
    {
        result.status = Sandwich::above;
    }
    else
    {
        result.status = Sandwich::within;
    }
    return result;
}

//---------------------------------------------------------------------------//
double lambda_function(ProbVector const& probs, int arity, double lambda)
{
    double total = 0;
    for (double p : probs.values())
    {
        total += std::pow(p, lambda) * std::log(arity * p);
    }
    return total;
}

double phi(ProbVector const& probs, int arity, double x)
{
    double total = 0;
    for (double p : probs.values())
    {
        total += std::pow(p, x);
    }
    return x * std::log(static_cast<double>(arity)) + std::log(total);
}

//---------------------------------------------------------------------------//
/*!
 * Within the sandwich g(0) <= 0 <= g(1), and the root is unique. Bisection
 * runs until the bracket cannot shrink further in double precision.
 */
LambdaResult solve_lambda(ProbVector const& probs, int arity)
{
    if (sandwich_check(probs, arity).status != Sandwich::within)
    {
        throw ValidationError("lambda is only defined when M lies within the "
                              "entropy/geometric sandwich");
    }

    bool degenerate = true;
    for (double p : probs.values())
    {
        degenerate = degenerate
                     && std::abs(std::log(arity * p)) < threshold_tol;
    }
    if (degenerate)
    {
        return LambdaResult{
            0.5, std::abs(lambda_function(probs, arity, 0.5)), true};
    }

    auto g = [&](double x) { return lambda_function(probs, arity, x); };
    double lo = 0;
    double hi = 1;
    double g_lo = g(lo);
    double g_hi = g(hi);
    if (g_lo >= 0)
    {
        return LambdaResult{lo, std::abs(g_lo), false};
    }
    if (g_hi <= 0)
    {
        return LambdaResult{hi, std::abs(g_hi), false};
    }
    for (int iter = 0; iter < 200; ++iter)
    {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        double const g_mid = g(mid);
        if (g_mid == 0)
        {
            return LambdaResult{mid, 0, false};
        }
        if (g_mid < 0)
        {
            lo = mid;
            g_lo = g_mid;
        }
        else
        {
            hi = mid;
            g_hi = g_mid;
        }
    }
    return std::abs(g_lo) <= std::abs(g_hi)
               ? LambdaResult{lo, std::abs(g_lo), false}
               : LambdaResult{hi, std::abs(g_hi), false};
}

//---------------------------------------------------------------------------//
double trivial_upper_bound(int num_labels, int arity, double ratio)
{
    check_inputs(arity, ratio);
    return std::log(static_cast<double>(std::min(num_labels, arity)))
           / -std::log(ratio);
}

double upper_bound(ProbVector const& probs, int arity, double ratio)
{
    check_inputs(arity, ratio);
    if (sandwich_check(probs, arity).status != Sandwich::within)
    {
        return trivial_upper_bound(probs.size(), arity, ratio);
    }
    auto const lambda = solve_lambda(probs, arity);
    return phi(probs, arity, lambda.lambda) / -std::log(ratio);
}

//---------------------------------------------------------------------------//
double xi(double p, int arity)
{
    if (!(p > 0 && p < 1))
    {
        throw ValidationError("xi needs p in (0,1)");
    }
    double const m = arity;
    if (p * (1 - p) > (1 + threshold_tol) / (m * m))
    {
        throw ValidationError("xi requires p(1-p) <= M^-2");
    }
    if (arity == 2 && std::abs(p - 0.5) < threshold_tol)
    {
        return 0.5;
    }
    return std::log(m * p) / (std::log(p) - std::log1p(-p));
}

//---------------------------------------------------------------------------//
BoundsReport classify(ProbVector const& probs, int arity, double ratio)
{
    check_inputs(arity, ratio);
    BoundsReport report;
    report.lower = lower_bound(probs, arity, ratio);
    report.upper = upper_bound(probs, arity, ratio);
    report.trivial_upper = trivial_upper_bound(probs.size(), arity, ratio);
    report.sandwich = sandwich_check(probs, arity);
    if (report.sandwich.status == Sandwich::within)
    {
        report.lambda = solve_lambda(probs, arity);
    }

    double const log_r = std::log(ratio);
    auto const m = static_cast<double>(arity);
    if (probs.is_uniform() && arity >= probs.size())
    {
        report.exact = -std::log(static_cast<double>(probs.size())) / log_r;
        report.exact_reason = ExactReason::symmetric;
    }
    else if (m <= std::min(report.sandwich.entropy_threshold,
                           1 / sum_of_squares(probs))
                      * (1 + threshold_tol))
    {
        report.exact = -std::log(m) / log_r;
        report.exact_reason = ExactReason::small_arity;
    }
    return report;
}

//---------------------------------------------------------------------------//
std::string_view to_string(Sandwich s)
{
    switch (s)
    {
        case Sandwich::below:
            return "below";
        case Sandwich::within:
            return "within";
        case Sandwich::above:
            return "above";
    }
    return "unknown";
}

std::string_view to_string(ExactReason r)
{
    switch (r)
    {
        case ExactReason::small_arity:
            return "small-M corollary";
        case ExactReason::symmetric:
            return "symmetric corollary";
    }
    return "unknown";
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
