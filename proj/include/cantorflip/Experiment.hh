//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cantorflip/Experiment.hh
//! \brief Experiment configuration and machine-readable reports.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "Bounds.hh"
#include "Ifs.hh"
#include "ProbVector.hh"
#include "Stochastic.hh"

namespace cantorflip
{
//---------------------------------------------------------------------------//
enum class Mode
{
    simulate,
    bounds,
    exact,
    deterministic,
};

/*!
 * Experiment description loaded from JSON.
 *
 * Keys: N, r, translations, orientations, p, M, mode, depth, trials,
 * master_seed, m, offset, window ([first, last]), t, outputs ({csv, json}).
 * Only N and r are required; everything else has a default.
 */
struct ExperimentConfig
{
    int num_maps{2};
    double ratio{1.0 / 3};
    std::vector<double> translations;  //!< Empty: canonical layout
    std::vector<int> orientations;  //!< Empty: all preserving
    std::vector<double> probs;  //!< Empty: uniform
    int arity{2};
    Mode mode{Mode::bounds};
    int depth{20};
    std::uint64_t trials{200};
    std::uint64_t master_seed{1};
    int period{3};
    std::optional<int> offset;
    LevelWindow window{10, 20};
    double energy_t{0.3};
    std::string csv_output;
    std::string json_output;

    // Build and validate the IFS
    IfsSpec ifs() const;

    // Build and validate the probability vector (uniform when unset)
    ProbVector prob_vector() const;

    // Check all numeric constraints; throws ValidationError
    void validate() const;
};

// Parse and validate a config document
ExperimentConfig parse_config(nlohmann::json const& doc);

// Load from a file path
ExperimentConfig load_config(std::string const& path);

// Canonical JSON form (round-trips through parse_config)
nlohmann::json to_json(ExperimentConfig const& config);

// FNV-1a hash of the canonical JSON, as 16 hex digits
std::string config_hash(ExperimentConfig const& config);

Mode parse_mode(std::string const& name);
std::string to_string(Mode mode);

//---------------------------------------------------------------------------//
// REPORTS
//---------------------------------------------------------------------------//
//! One row of the comparison between deterministic and random dimensions.
struct Table1Row
{
    int m{2};
    double p{0.5};
    double lower{0};
    double dim_fm{0};
    double upper{0};
};

//! One point of the N = M = 2 bound curves.
struct Figure1Row
{
    double p{0.5};
    double lower{0};
    double upper{0};
};

//! Periods shown in the comparison table.
inline constexpr int table1_periods[] = {2, 3, 4, 6, 7, 14, 15, 30};

// Bounds with p = (1/m, 1 - 1/m), N = M = 2, against dim F_m
std::vector<Table1Row> table1(double ratio = 1.0 / 3);

// Uniform grid p_k = k/(grid+1), k = 1..grid
std::vector<Figure1Row> figure1(int grid_size, double ratio = 1.0 / 3);

nlohmann::json to_json(BoundsReport const& report);
nlohmann::json summary_json(ExperimentConfig const& config,
                            TrialResults const& results,
                            double estimate);

// Schema checks for emitted reports; return an error message or empty
std::string check_bounds_schema(nlohmann::json const& doc);
std::string check_summary_schema(nlohmann::json const& doc);
std::string check_deterministic_schema(nlohmann::json const& doc);

//---------------------------------------------------------------------------//
// CSV
//---------------------------------------------------------------------------//
// Format with 9 significant digits
std::string format_number(double value);

std::string table1_csv(std::vector<Table1Row> const& rows);
std::string figure1_csv(std::vector<Figure1Row> const& rows);
std::string levels_csv(TrialResults const& results);
std::string bounds_csv(BoundsReport const& report);

//---------------------------------------------------------------------------//
}  // namespace cantorflip
