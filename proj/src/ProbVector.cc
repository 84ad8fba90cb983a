//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file ProbVector.cc
//---------------------------------------------------------------------------//
#include "cantorflip/ProbVector.hh"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <utility>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
ProbVector::ProbVector(std::vector<double> probs) : probs_{std::move(probs)}
{
    if (probs_.size() < 2)
    {
        throw ValidationError("probability vector needs at least 2 entries");
    }
    double total = 0;
    for (auto p : probs_)
    {
        if (!(p > 0 && p < 1))
        {
            std::ostringstream msg;
            msg << "probability entries must lie in (0,1), got " << p;
            throw ValidationError(msg.str());
        }
        total += p;
    }
    if (std::abs(total - 1) > sum_tol)
    {
        std::ostringstream msg;
        msg << "probability entries must sum to 1 (within " << sum_tol
            << "), got " << std::setprecision(17) << total;
        throw ValidationError(msg.str());
    }
}

ProbVector ProbVector::uniform(int n)
{
    return ProbVector(std::vector<double>(static_cast<std::size_t>(n),
                                          1.0 / n));
}

ProbVector ProbVector::binary(double p)
{
    return ProbVector({p, 1 - p});
}

bool ProbVector::is_uniform() const
{
    double const target = 1.0 / static_cast<double>(probs_.size());
    for (auto p : probs_)
    {
        if (std::abs(p - target) > sum_tol)
        {
            return false;
        }
    }
    return true;
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
