//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Stochastic.hh
//! \brief Branching occupancy simulation of randomly labeled M-ary trees.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "Ifs.hh"
#include "ProbVector.hh"
#include "Random.hh"
#include "Symbolic.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
//! Every m-th edge (kappa == offset mod m) carries label 2, all others 1.
struct PeriodicSource
{
    int period{2};
    int offset{1};

    // Label in {1, 2} of the edge with the given index
    int label(EdgeIndex k) const;
};

//---------------------------------------------------------------------------//
/*!
 * Level-n occupancy: for each label word carried by at least one tree path,
 * the number of paths carrying it.
 *
 * Words are stored by their base-N rank (symbol s contributes digit s - 1,
 * most significant first) in increasing order; zero counts are omitted.
 */
class OccupancyMap
{
  public:
    struct Entry
    {
        std::uint64_t code{0};
        std::uint64_t count{0};
    };

    // Root: the empty word carried by the single root path
    static OccupancyMap root(int num_labels);

    // Construct from explicit entries (sorted and validated)
    OccupancyMap(int num_labels, int level, std::vector<Entry> entries);

    int num_labels() const { return num_labels_; }
    int level() const { return level_; }
    std::vector<Entry> const& entries() const { return entries_; }

    // Decode an entry's word
    LabelWord word(Entry const& e) const;

    // Sum of all path counts
    std::uint64_t total_paths() const;

  private:
    int num_labels_;
    int level_;
    std::vector<Entry> entries_;
};

//---------------------------------------------------------------------------//
/*!
 * Empirical measure: weight(w) = count(w) / M^n, kept as exact integers.
 */
struct RandomMeasure
{
    int level{0};
    std::uint64_t denominator{1};
    std::vector<LabelWord> words;
    std::vector<std::uint64_t> numerators;

    double weight(std::size_t i) const
    {
        return static_cast<double>(numerators[i])
               / static_cast<double>(denominator);
    }
};

//---------------------------------------------------------------------------//
//! Per-level summary of Z_n across trials.
struct LevelStats
{
    int level{0};
    double mean{0};
    double variance{0};  //!< Unbiased sample variance
    std::uint64_t min{0};
    std::uint64_t max{0};
};

struct TrialResults
{
    std::uint64_t master_seed{0};
    std::uint64_t trials{0};
    std::vector<LevelStats> levels;  //!< Index = level, 0..depth
    std::vector<std::vector<std::uint64_t>> traces;  //!< [trial][level]
};

struct TrialOptions
{
    int arity{2};
    int depth{10};
    std::uint64_t trials{100};
    std::uint64_t master_seed{0};
    unsigned int threads{1};
    bool keep_traces{false};
};

//! Inclusive level range for regression.
struct LevelWindow
{
    int first{0};
    int last{0};
};

//---------------------------------------------------------------------------//
// Maximum trials x depth accepted by run_trials
inline constexpr std::uint64_t trial_budget = 100'000'000;

// Advance one level: split each word's M*c child paths multinomially
OccupancyMap evolve(OccupancyMap const& occ,
                    ProbVector const& probs,
                    int arity,
                    RngStream& rng);

// Number of occupied label words
std::uint64_t z_n(OccupancyMap const& occ);

// Exact empirical measure of the occupancy
RandomMeasure measure(OccupancyMap const& occ);

// Z_0..Z_depth of a single trial
std::vector<std::uint64_t> simulate_trace(ProbVector const& probs,
                                          int arity,
                                          int depth,
                                          std::uint64_t seed);

// Independent trials with per-level statistics
TrialResults run_trials(IfsSpec const& spec,
                        ProbVector const& probs,
                        TrialOptions const& opts);

// Least-squares slope of ln Z_n over the window, divided by -ln r
double estimate_dim(std::span<double const> z_series,
                    double ratio,
                    LevelWindow window);

// Truncated discrete t-energy of the empirical measure (diagnostic only)
double energy_estimate(OccupancyMap const& occ, IfsSpec const& spec, double t);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
