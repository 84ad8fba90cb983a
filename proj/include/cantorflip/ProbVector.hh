//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/ProbVector.hh
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <vector>

namespace cantorflip
{
//---------------------------------------------------------------------------//
/*!
 * Edge-label distribution p = (p_1, ..., p_N).
 *
 * Every entry lies strictly inside (0,1) and the entries sum to one within
 * 1e-12.
 */
class ProbVector
{
  public:
    //! Tolerance on the total mass
    static constexpr double sum_tol = 1e-12;

    // Construct and validate
    explicit ProbVector(std::vector<double> probs);

    // Uniform distribution over n labels
    static ProbVector uniform(int n);

    // Two labels with probabilities (p, 1 - p)
    static ProbVector binary(double p);

    int size() const { return static_cast<int>(probs_.size()); }
    double operator[](int i) const
    {
        return probs_[static_cast<std::size_t>(i)];
    }
    std::span<double const> values() const { return probs_; }

    // Whether all entries are equal within tolerance
    bool is_uniform() const;

  private:
    std::vector<double> probs_;
};

//---------------------------------------------------------------------------//
}  // namespace cantorflip
