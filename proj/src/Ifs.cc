//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Ifs.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Ifs.hh"

#include <cmath>
#include <string>
#include <utility>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
// Slack for endpoint comparisons of user-supplied translations
constexpr double geometry_tol = 1e-12;
}  // namespace

//---------------------------------------------------------------------------//
IfsSpec::IfsSpec(double ratio,
                 std::vector<double> translations,
                 std::vector<Orientation> orientations)
    : ratio_{ratio}
    , translations_{std::move(translations)}
    , orientations_{std::move(orientations)}
{
    int const n = this->num_maps();
    if (n < 2)
    {
        throw ValidationError("IFS needs at least 2 maps, got "
                              + std::to_string(n));
    }
    if (orientations_.empty())
    {
        orientations_.assign(translations_.size(), Orientation::preserving);
    }
    if (orientations_.size() != translations_.size())
    {
        throw ValidationError("orientations and translations differ in size");
    }
    if (!(ratio_ > 0) || ratio_ > 1.0 / n + geometry_tol)
    {
        throw ValidationError("contraction ratio r must lie in (0, 1/N], got "
                              + std::to_string(ratio_));
    }
    for (int i = 0; i < n; ++i)
    {
        double const b = translations_[static_cast<std::size_t>(i)];
        if (b < -geometry_tol || b + ratio_ > 1 + geometry_tol)
        {
            throw ValidationError("image of map " + std::to_string(i + 1)
                                  + " is not contained in [0,1]");
        }
        if (i > 0
            && b < translations_[static_cast<std::size_t>(i - 1)] + ratio_
                       - geometry_tol)
        {
            throw ValidationError("images of maps " + std::to_string(i)
                                  + " and " + std::to_string(i + 1)
                                  + " overlap or are out of order");
        }
    }
}

double IfsSpec::apply(int i, double x) const
{
    auto const idx = static_cast<std::size_t>(i - 1);
    double const b = translations_[idx];
    return orientations_[idx] == Orientation::preserving
               ? b + ratio_ * x
               : b + ratio_ * (1 - x);
}

//---------------------------------------------------------------------------//
IfsSpec canonical_spec(int num_maps, double ratio)
{
    if (num_maps < 2)
    {
        throw ValidationError("IFS needs at least 2 maps");
    }
    std::vector<double> b(static_cast<std::size_t>(num_maps));
    for (int i = 0; i < num_maps; ++i)
    {
        b[static_cast<std::size_t>(i)] = i * (1 - ratio) / (num_maps - 1);
    }
    return IfsSpec(ratio, std::move(b), {});
}

//---------------------------------------------------------------------------//
/*!
 * Compose the word's maps left to right into one affine map x -> a x + c,
 * then apply it to the endpoints of [0,1].
 */
Interval interval(IfsSpec const& spec, LabelWord const& w)
{
    if (w.alphabet() != spec.num_maps())
    {
        throw ValidationError("label alphabet " + std::to_string(w.alphabet())
                              + " does not match IFS with "
                              + std::to_string(spec.num_maps()) + " maps");
    }
    double slope = 1;
    double offset = 0;
    for (auto s : w.symbols())
    {
        // (a x + c) o f_s
        auto const idx = static_cast<std::size_t>(s - 1);
        double const b = spec.translations()[idx];
        double const r = spec.ratio();
        if (spec.orientations()[idx] == Orientation::preserving)
        {
            offset += slope * b;
            slope *= r;
        }
        else
        {
            offset += slope * (b + r);
            slope *= -r;
        }
    }
    double const left = slope > 0 ? offset : offset + slope;
    return Interval{left, std::abs(slope)};
}

//---------------------------------------------------------------------------//
double dim_C(IfsSpec const& spec)
{
    return -std::log(static_cast<double>(spec.num_maps()))
           / std::log(spec.ratio());
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
