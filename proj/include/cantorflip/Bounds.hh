//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Bounds.hh
//! \brief Hausdorff and upper box-dimension bounds for the random subset.
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string_view>

#include "ProbVector.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
//! Position of M relative to the entropy and geometric-mean thresholds.
enum class Sandwich
{
    below,
    within,
    above,
};

struct SandwichResult
{
    Sandwich status{Sandwich::within};
    double entropy_threshold{0};  //!< prod p_i^(-p_i)
    double geometric_threshold{0};  //!< (prod p_i)^(-1/N)
};

//! Root of g(lambda) = sum p_i^lambda log(M p_i) on [0,1].
struct LambdaResult
{
    double lambda{0.5};
    double residual{0};  //!< |g(lambda)|
    bool degenerate{false};  //!< M p_i = 1 for all i, so g vanishes
};

//! Why an exact dimension is known.
enum class ExactReason
{
    small_arity,  //!< M <= min{prod p_i^(-p_i), 1/sum p_i^2}
    symmetric,  //!< M >= N and p uniform
};

struct BoundsReport
{
    double lower{0};
    double upper{0};
    double trivial_upper{0};
    SandwichResult sandwich;
    std::optional<LambdaResult> lambda;
    std::optional<double> exact;
    std::optional<ExactReason> exact_reason;
};

//---------------------------------------------------------------------------//
// min{-log M / log r, log(sum p_i^2) / log r}
double lower_bound(ProbVector const& probs, int arity, double ratio);

// Compare M with the entropy and geometric thresholds
SandwichResult sandwich_check(ProbVector const& probs, int arity);

// g(lambda) = sum p_i^lambda log(M p_i)
double lambda_function(ProbVector const& probs, int arity, double lambda);

// phi(x) = x log M + log sum p_i^x
double phi(ProbVector const& probs, int arity, double x);

// Bisection root of g on [0,1]; requires M within the sandwich
LambdaResult solve_lambda(ProbVector const& probs, int arity);

// min{log N, log M} / -log r
double trivial_upper_bound(int num_labels, int arity, double ratio);

// -phi(lambda)/log r within the sandwich, else the trivial bound
double upper_bound(ProbVector const& probs, int arity, double ratio);

// Two-map frequency log(Mp) / (log p - log(1-p)), with xi(1/2) = 1/2 at M=2
double xi(double p, int arity);

// All bounds plus exact dimension where a small-M or symmetric case applies
BoundsReport classify(ProbVector const& probs, int arity, double ratio);

std::string_view to_string(Sandwich s);
std::string_view to_string(ExactReason r);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
