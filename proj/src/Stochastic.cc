//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Stochastic.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Stochastic.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
__extension__ typedef unsigned __int128 Wide;

constexpr Wide path_limit = Wide{1} << 63;

//! Whether base^exp < limit, without overflow.
bool power_below(int base, int exp, Wide limit)
{
    Wide value = 1;
    for (int i = 0; i < exp; ++i)
    {
        value *= static_cast<Wide>(base);
        if (value >= limit)
        {
            return false;
        }
    }
    return true;
}

void check_depth(int num_labels, int arity, int depth)
{
    if (!power_below(arity, depth, path_limit))
    {
        throw BudgetError("M^depth = " + std::to_string(arity) + "^"
                          + std::to_string(depth)
                          + " path count does not fit below 2^63");
    }
    if (!power_below(num_labels,
                     depth,
                     Wide{std::numeric_limits<std::uint64_t>::max()}))
    {
        throw BudgetError("N^depth = " + std::to_string(num_labels) + "^"
                          + std::to_string(depth)
                          + " label words do not fit in 64-bit codes");
    }
}
}  // namespace

//---------------------------------------------------------------------------//
int PeriodicSource::label(EdgeIndex k) const
{
    auto const period_u = static_cast<std::uint64_t>(period);
    return k.value % period_u == static_cast<std::uint64_t>(offset) ? 2 : 1;
}

//---------------------------------------------------------------------------//
OccupancyMap OccupancyMap::root(int num_labels)
{
    return OccupancyMap(num_labels, 0, {Entry{0, 1}});
}

OccupancyMap::OccupancyMap(int num_labels, int level, std::vector<Entry> entries)
    : num_labels_{num_labels}, level_{level}, entries_{std::move(entries)}
{
    if (num_labels_ < 2)
    {
        throw ValidationError("occupancy needs at least 2 labels");
    }
    if (level_ < 0)
    {
        throw ValidationError("occupancy level must be non-negative");
    }
    std::erase_if(entries_, [](Entry const& e) { return e.count == 0; });
    std::sort(entries_.begin(),
              entries_.end(),
              [](Entry const& a, Entry const& b) { return a.code < b.code; });
    for (std::size_t i = 1; i < entries_.size(); ++i)
    {
        if (entries_[i].code == entries_[i - 1].code)
        {
            throw ValidationError("duplicate word in occupancy map");
        }
    }
}

LabelWord OccupancyMap::word(Entry const& e) const
{
    std::vector<int> symbols(static_cast<std::size_t>(level_));
    auto code = e.code;
    auto const base = static_cast<std::uint64_t>(num_labels_);
    for (int i = level_ - 1; i >= 0; --i)
    {
        symbols[static_cast<std::size_t>(i)] = static_cast<int>(code % base)
                                               + 1;
        code /= base;
    }
    return LabelWord(num_labels_, std::move(symbols));
}

std::uint64_t OccupancyMap::total_paths() const
{
    std::uint64_t total = 0;
    for (auto const& e : entries_)
    {
        total += e.count;
    }
    return total;
}

//---------------------------------------------------------------------------//
/*!
 * Edge labels are i.i.d., so the M*c children of the c paths carrying w are
 * distributed over the N extensions w.l as Multinomial(M*c, p). Child codes
 * code*N + l - 1 preserve the sort order of the parents.
 */
OccupancyMap evolve(OccupancyMap const& occ,
                    ProbVector const& probs,
                    int arity,
                    RngStream& rng)
{
    int const n_labels = occ.num_labels();
    if (probs.size() != n_labels)
    {
        throw ValidationError("probability vector size does not match the "
                              "label alphabet");
    }
    if (arity < 2)
    {
        throw ValidationError("tree arity must be at least 2");
    }
    check_depth(n_labels, arity, occ.level() + 1);

    auto const base = static_cast<std::uint64_t>(n_labels);
    auto const m = static_cast<std::uint64_t>(arity);
    std::vector<OccupancyMap::Entry> next;
    next.reserve(occ.entries().size() * 2);
    for (auto const& e : occ.entries())
    {
        auto counts = rng.multinomial(m * e.count, probs.values());
        for (std::uint64_t l = 0; l < base; ++l)
        {
            if (counts[l] > 0)
            {
                next.push_back({e.code * base + l, counts[l]});
            }
        }
    }
    return OccupancyMap(n_labels, occ.level() + 1, std::move(next));
}

//---------------------------------------------------------------------------//
std::uint64_t z_n(OccupancyMap const& occ)
{
    return occ.entries().size();
}

//---------------------------------------------------------------------------//
RandomMeasure measure(OccupancyMap const& occ)
{
    RandomMeasure result;
    result.level = occ.level();
    result.denominator = occ.total_paths();
    result.words.reserve(occ.entries().size());
    result.numerators.reserve(occ.entries().size());
    for (auto const& e : occ.entries())
    {
        result.words.push_back(occ.word(e));
        result.numerators.push_back(e.count);
    }
    return result;
}

//---------------------------------------------------------------------------//
std::vector<std::uint64_t> simulate_trace(ProbVector const& probs,
                                          int arity,
                                          int depth,
                                          std::uint64_t seed)
{
    check_depth(probs.size(), arity, depth);
    RngStream rng(seed);
    auto occ = OccupancyMap::root(probs.size());
    std::vector<std::uint64_t> trace{z_n(occ)};
    trace.reserve(static_cast<std::size_t>(depth) + 1);
    for (int level = 1; level <= depth; ++level)
    {
        occ = evolve(occ, probs, arity, rng);
        trace.push_back(z_n(occ));
    }
    return trace;
}

//---------------------------------------------------------------------------//
/*!
 * Trials are distributed over threads in contiguous blocks; every trial
 * writes only its own trace and statistics are reduced afterwards in trial
 * order, so results are identical for any thread count.
 */
TrialResults run_trials(IfsSpec const& spec,
                        ProbVector const& probs,
                        TrialOptions const& opts)
{
    if (probs.size() != spec.num_maps())
    {
        throw ValidationError("probability vector has "
                              + std::to_string(probs.size())
                              + " entries but the IFS has "
                              + std::to_string(spec.num_maps()) + " maps");
    }
    if (opts.depth < 0 || opts.trials == 0)
    {
        throw ValidationError("need depth >= 0 and at least one trial");
    }
    check_depth(probs.size(), opts.arity, opts.depth);
    if (opts.trials > trial_budget / std::max(opts.depth, 1))
    {
        throw BudgetError("trials x depth exceeds the budget of "
                          + std::to_string(trial_budget));
    }

    std::vector<std::vector<std::uint64_t>> traces(opts.trials);
    auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
        for (auto t = begin; t < end; ++t)
        {
            traces[t] = simulate_trace(probs,
                                       opts.arity,
                                       opts.depth,
                                       trial_seed(opts.master_seed, t));
        }
    };

    auto const n_threads = static_cast<std::uint64_t>(
        std::clamp<unsigned int>(opts.threads, 1, 256));
    if (n_threads == 1 || opts.trials == 1)
    {
        run_block(0, opts.trials);
    }
    else
    {
        std::vector<std::jthread> workers;
        auto const block = (opts.trials + n_threads - 1) / n_threads;
        for (std::uint64_t begin = 0; begin < opts.trials; begin += block)
        {
            workers.emplace_back(
                run_block, begin, std::min(begin + block, opts.trials));
        }
    }

    TrialResults result;
    result.master_seed = opts.master_seed;
    result.trials = opts.trials;
    for (int level = 0; level <= opts.depth; ++level)
    {
        auto const idx = static_cast<std::size_t>(level);
        LevelStats stats;
        stats.level = level;
        stats.min = std::numeric_limits<std::uint64_t>::max();
        // Welford update in trial order
        double mean = 0;
        double m2 = 0;
        std::uint64_t count = 0;
        for (auto const& trace : traces)
        {
            auto const z = trace[idx];
            ++count;
            double const delta = static_cast<double>(z) - mean;
            mean += delta / static_cast<double>(count);
            m2 += delta * (static_cast<double>(z) - mean);
            stats.min = std::min(stats.min, z);
            stats.max = std::max(stats.max, z);
        }
        stats.mean = mean;
        stats.variance = count > 1 ? m2 / static_cast<double>(count - 1) : 0;
        result.levels.push_back(stats);
    }
    if (opts.keep_traces)
    {
        result.traces = std::move(traces);
    }
    return result;
}

//---------------------------------------------------------------------------//
double estimate_dim(std::span<double const> z_series,
                    double ratio,
                    LevelWindow window)
{
    if (window.first < 0 || window.last <= window.first
        || static_cast<std::size_t>(window.last) >= z_series.size())
    {
        throw ValidationError("regression window must contain at least two "
                              "levels inside the series");
    }
    if (!(ratio > 0 && ratio < 1))
    {
        throw ValidationError("contraction ratio must lie in (0,1)");
    }
    double const count = window.last - window.first + 1;
    double sx = 0;
    double sy = 0;
    for (int n = window.first; n <= window.last; ++n)
    {
        double const z = z_series[static_cast<std::size_t>(n)];
        if (!(z >= 1))
        {
            throw ValidationError("occupancy counts must be at least 1");
        }
        sx += n;
        sy += std::log(z);
    }
    double const mx = sx / count;
    double const my = sy / count;
    double sxy = 0;
    double sxx = 0;
    for (int n = window.first; n <= window.last; ++n)
    {
        double const dx = n - mx;
        sxy += dx * (std::log(z_series[static_cast<std::size_t>(n)]) - my);
        sxx += dx * dx;
    }
    return (sxy / sxx) / -std::log(ratio);
}

//---------------------------------------------------------------------------//
/*!
 * Sum over ordered pairs of distinct occupied words of
 * m(w) m(w') |mid(I_w) - mid(I_w')|^(-t).
 *
 * The diagonal is dropped, so this is a lower estimate of the energy
 * truncated at the scale r^n of the occupancy level.
 */
double energy_estimate(OccupancyMap const& occ, IfsSpec const& spec, double t)
{
    if (!(t > 0))
    {
        throw ValidationError("energy exponent t must be positive");
    }
    auto const m = measure(occ);
    std::vector<double> mids;
    std::vector<double> weights;
    mids.reserve(m.words.size());
    for (std::size_t i = 0; i < m.words.size(); ++i)
    {
        mids.push_back(interval(spec, m.words[i]).midpoint());
        weights.push_back(m.weight(i));
    }
    double total = 0;
    for (std::size_t i = 0; i < mids.size(); ++i)
    {
        double row = 0;
        for (std::size_t j = i + 1; j < mids.size(); ++j)
        {
            row += weights[j] * std::pow(std::abs(mids[i] - mids[j]), -t);
        }
        total += weights[i] * row;
    }
    return 2 * total;
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
