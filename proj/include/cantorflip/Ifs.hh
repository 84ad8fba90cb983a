//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Ifs.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "Symbolic.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
//! Direction of an affine map of the unit interval.
enum class Orientation : int
{
    reversing = -1,
    preserving = 1,
};

//---------------------------------------------------------------------------//
/*!
 * Equicontractive IFS on [0,1] with maps f_i(x) = b_i + r x (preserving) or
 * f_i(x) = b_i + r (1 - x) (reversing).
 *
 * The translation b_i is the left endpoint of f_i([0,1]) in both cases. The
 * images must be ordered left to right, lie in [0,1], and have disjoint
 * interiors.
 */
class IfsSpec
{
  public:
    // Construct and validate
    IfsSpec(double ratio,
            std::vector<double> translations,
            std::vector<Orientation> orientations);

    int num_maps() const { return static_cast<int>(translations_.size()); }
    double ratio() const { return ratio_; }
    std::vector<double> const& translations() const { return translations_; }
    std::vector<Orientation> const& orientations() const
    {
        return orientations_;
    }

    // Apply map i (1-based) to a point
    double apply(int i, double x) const;

  private:
    double ratio_;
    std::vector<double> translations_;
    std::vector<Orientation> orientations_;
};

//---------------------------------------------------------------------------//
//! A closed subinterval [left, left + length] of [0,1].
struct Interval
{
    double left{0};
    double length{1};

    double right() const { return left + length; }
    double midpoint() const { return left + 0.5 * length; }
};

//---------------------------------------------------------------------------//
// Equally spaced, orientation-preserving maps with f_1(0)=0, f_N(1)=1
IfsSpec canonical_spec(int num_maps, double ratio);

// Basic interval f_{w_1} o ... o f_{w_n}([0,1])
Interval interval(IfsSpec const& spec, LabelWord const& w);

// Similarity dimension -log N / log r of the attractor
double dim_C(IfsSpec const& spec);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
