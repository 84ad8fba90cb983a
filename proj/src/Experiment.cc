//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Experiment.cc
//---------------------------------------------------------------------------//
#include "cantorflip/Experiment.hh"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cantorflip/Deterministic.hh"
#include "cantorflip/Errors.hh"

namespace cantorflip
{
namespace
{
using nlohmann::json;

template<class T>
T get_or(json const& doc, char const* key, T fallback)
{
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null())
    {
        return fallback;
    }
    try
    {
        return it->get<T>();
    }
    catch (json::exception const& e)
    {
        throw ValidationError(std::string("config key '") + key
                              + "' has the wrong type: " + e.what());
    }
}

std::string require_field(json const& doc, char const* key, json::value_t type)
{
    auto it = doc.find(key);
    if (it == doc.end())
    {
        return std::string("missing key '") + key + "'";
    }
    bool ok = it->type() == type
              || (type == json::value_t::number_float && it->is_number());
    return ok ? std::string{} : std::string("key '") + key + "' has wrong type";
}
}  // namespace

//---------------------------------------------------------------------------//
IfsSpec ExperimentConfig::ifs() const
{
    if (translations.empty() && orientations.empty())
    {
        return canonical_spec(num_maps, ratio);
    }
    std::vector<double> b = translations;
    if (b.empty())
    {
        b = canonical_spec(num_maps, ratio).translations();
    }
    if (static_cast<int>(b.size()) != num_maps)
    {
        throw ValidationError("expected " + std::to_string(num_maps)
                              + " translations");
    }
    std::vector<Orientation> o;
    for (int v : orientations)
    {
        if (v != 1 && v != -1)
        {
            throw ValidationError("orientations must be +1 or -1");
        }
        o.push_back(static_cast<Orientation>(v));
    }
    return IfsSpec(ratio, std::move(b), std::move(o));
}

ProbVector ExperimentConfig::prob_vector() const
{
    if (probs.empty())
    {
        return ProbVector::uniform(num_maps);
    }
    if (static_cast<int>(probs.size()) != num_maps)
    {
        throw ValidationError("p has " + std::to_string(probs.size())
                              + " entries but N = "
                              + std::to_string(num_maps));
    }
    return ProbVector(probs);
}

void ExperimentConfig::validate() const
{
    if (num_maps < 2)
    {
        throw ValidationError("N must be at least 2");
    }
    if (arity < 2)
    {
        throw ValidationError("M must be at least 2");
    }
    if (depth < 0)
    {
        throw ValidationError("depth must be non-negative");
    }
    if (trials == 0)
    {
        throw ValidationError("trials must be positive");
    }
    if (period < 2)
    {
        throw ValidationError("m must be at least 2");
    }
    if (offset && (*offset < 0 || *offset >= period))
    {
        throw ValidationError("offset must lie in 0..m-1");
    }
    if (!(energy_t > 0))
    {
        throw ValidationError("energy exponent t must be positive");
    }
    if (window.first < 0 || window.last <= window.first)
    {
        throw ValidationError("window must be [first, last] with first < "
                              "last");
    }
    // Constructing these checks r, translations, orientations, and p
    this->ifs();
    this->prob_vector();
}

//---------------------------------------------------------------------------//
Mode parse_mode(std::string const& name)
{
    if (name == "simulate")
        return Mode::simulate;
    if (name == "bounds")
        return Mode::bounds;
    if (name == "exact")
        return Mode::exact;
    if (name == "deterministic")
        return Mode::deterministic;
    throw ValidationError("unknown mode '" + name + "'");
}

std::string to_string(Mode mode)
{
    switch (mode)
    {
        case Mode::simulate:
            return "simulate";
        case Mode::bounds:
            return "bounds";
        case Mode::exact:
            return "exact";
        case Mode::deterministic:
            return "deterministic";
    }
    return "bounds";
}

//---------------------------------------------------------------------------//
ExperimentConfig parse_config(json const& doc)
{
    if (!doc.is_object())
    {
        throw ValidationError("config must be a JSON object");
    }
    for (char const* key : {"N", "r"})
    {
        if (!doc.contains(key))
        {
            throw ValidationError(std::string("config is missing required "
                                              "key '")
                                  + key + "'");
        }
    }
    ExperimentConfig c;
    c.num_maps = get_or<int>(doc, "N", c.num_maps);
    c.ratio = get_or<double>(doc, "r", c.ratio);
    c.translations = get_or<std::vector<double>>(doc, "translations", {});
    c.orientations = get_or<std::vector<int>>(doc, "orientations", {});
    c.probs = get_or<std::vector<double>>(doc, "p", {});
    c.arity = get_or<int>(doc, "M", c.arity);
    c.mode = parse_mode(get_or<std::string>(doc, "mode", to_string(c.mode)));
    c.depth = get_or<int>(doc, "depth", c.depth);
    c.trials = get_or<std::uint64_t>(doc, "trials", c.trials);
    c.master_seed = get_or<std::uint64_t>(doc, "master_seed", c.master_seed);
    c.period = get_or<int>(doc, "m", c.period);
    if (doc.contains("offset") && !doc.at("offset").is_null())
    {
        c.offset = get_or<int>(doc, "offset", 0);
    }
    auto window = get_or<std::vector<int>>(
        doc, "window", {c.window.first, c.window.last});
    if (window.size() != 2)
    {
        throw ValidationError("window must be a two-element array");
    }
    c.window = {window[0], window[1]};
    c.energy_t = get_or<double>(doc, "t", c.energy_t);
    if (auto it = doc.find("outputs"); it != doc.end() && it->is_object())
    {
        c.csv_output = get_or<std::string>(*it, "csv", "");
        c.json_output = get_or<std::string>(*it, "json", "");
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ValidationError("cannot open config file '" + path + "'");
    }
    json doc;
    try
    {
        in >> doc;
    }
    catch (json::exception const& e)
    {
        throw ValidationError("config file '" + path
                              + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

json to_json(ExperimentConfig const& c)
{
    json doc{
        {"N", c.num_maps},
        {"r", c.ratio},
        {"translations", c.translations},
        {"orientations", c.orientations},
        {"p", c.probs},
        {"M", c.arity},
        {"mode", to_string(c.mode)},
        {"depth", c.depth},
        {"trials", c.trials},
        {"master_seed", c.master_seed},
        {"m", c.period},
        {"offset", c.offset ? json(*c.offset) : json(nullptr)},
        {"window", {c.window.first, c.window.last}},
        {"t", c.energy_t},
        {"outputs", {{"csv", c.csv_output}, {"json", c.json_output}}},
    };
    return doc;
}

std::string config_hash(ExperimentConfig const& config)
{
    // Output paths do not change results
    auto doc = to_json(config);
    doc.erase("outputs");
    auto const text = doc.dump();
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : text)
    {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(hash));
    return buf;
}

//---------------------------------------------------------------------------//
std::vector<Table1Row> table1(double ratio)
{
    std::vector<Table1Row> rows;
    for (int m : table1_periods)
    {
        auto const probs = ProbVector::binary(1.0 / m);
        Table1Row row;
        row.m = m;
        row.p = 1.0 / m;
        row.lower = lower_bound(probs, 2, ratio);
        row.dim_fm = dim_Fm(m, ratio);
        row.upper = upper_bound(probs, 2, ratio);
        rows.push_back(row);
    }
    return rows;
}

/*!
 * The upper curve uses the closed-form two-map frequency xi, an algebraic
 * route independent of the lambda bisection behind upper_bound.
 */
std::vector<Figure1Row> figure1(int grid_size, double ratio)
{
    if (grid_size < 3)
    {
        throw ValidationError("figure grid needs at least 3 points");
    }
    std::vector<Figure1Row> rows;
    rows.reserve(static_cast<std::size_t>(grid_size));
    double const log_r = std::log(ratio);
    for (int k = 1; k <= grid_size; ++k)
    {
        double const p = static_cast<double>(k) / (grid_size + 1);
        auto const probs = ProbVector::binary(p);
        double const f = xi(p, 2);
        Figure1Row row;
        row.p = p;
        row.lower = lower_bound(probs, 2, ratio);
        row.upper = (f * std::log(f) + (1 - f) * std::log1p(-f)) / log_r;
        rows.push_back(row);
    }
    return rows;
}

//---------------------------------------------------------------------------//
json to_json(BoundsReport const& report)
{
    json doc{
        {"lower", report.lower},
        {"upper", report.upper},
        {"trivial_upper", report.trivial_upper},
        {"sandwich",
         {{"status", std::string(to_string(report.sandwich.status))},
          {"entropy_threshold", report.sandwich.entropy_threshold},
          {"geometric_threshold", report.sandwich.geometric_threshold}}},
        {"lambda", nullptr},
        {"lambda_degenerate", false},
        {"exact", nullptr},
        {"exact_reason", nullptr},
    };
    if (report.lambda)
    {
        doc["lambda"] = report.lambda->lambda;
        doc["lambda_degenerate"] = report.lambda->degenerate;
    }
    if (report.exact)
    {
        doc["exact"] = *report.exact;
        doc["exact_reason"] = std::string(to_string(*report.exact_reason));
    }
    return doc;
}

json summary_json(ExperimentConfig const& config,
                  TrialResults const& results,
                  double estimate)
{
    return json{
        {"estimate", estimate},
        {"window", {config.window.first, config.window.last}},
        {"master_seed", results.master_seed},
        {"trials", results.trials},
        {"depth", config.depth},
        {"config_hash", config_hash(config)},
        {"config", to_json(config)},
    };
}

//---------------------------------------------------------------------------//
std::string check_bounds_schema(json const& doc)
{
    using vt = json::value_t;
    if (!doc.is_object())
        return "report is not an object";
    for (char const* key : {"lower", "upper", "trivial_upper"})
    {
        if (auto err = require_field(doc, key, vt::number_float); !err.empty())
            return err;
    }
    if (auto err = require_field(doc, "sandwich", vt::object); !err.empty())
        return err;
    auto const& s = doc.at("sandwich");
    if (auto err = require_field(s, "status", vt::string); !err.empty())
        return "sandwich: " + err;
    auto const status = s.at("status").get<std::string>();
    if (status != "below" && status != "within" && status != "above")
        return "sandwich.status has an unknown value";
    for (char const* key : {"entropy_threshold", "geometric_threshold"})
    {
        if (auto err = require_field(s, key, vt::number_float); !err.empty())
            return "sandwich: " + err;
    }
    for (char const* key : {"lambda", "exact", "exact_reason"})
    {
        if (!doc.contains(key))
            return std::string("missing key '") + key + "'";
    }
    if (!doc.at("lambda").is_null() && !doc.at("lambda").is_number())
        return "lambda must be a number or null";
    if (!doc.at("exact").is_null() && !doc.at("exact").is_number())
        return "exact must be a number or null";
    if (doc.at("exact").is_null() != doc.at("exact_reason").is_null())
        return "exact and exact_reason must be present together";
    return {};
}

std::string check_summary_schema(json const& doc)
{
    using vt = json::value_t;
    if (!doc.is_object())
        return "summary is not an object";
    if (auto err = require_field(doc, "estimate", vt::number_float);
        !err.empty())
        return err;
    if (auto err = require_field(doc, "window", vt::array); !err.empty())
        return err;
    if (doc.at("window").size() != 2)
        return "window must have two entries";
    for (char const* key : {"master_seed", "trials", "depth"})
    {
        if (!doc.contains(key) || !doc.at(key).is_number_integer())
            return std::string("key '") + key + "' must be an integer";
    }
    if (auto err = require_field(doc, "config_hash", vt::string); !err.empty())
        return err;
    if (doc.at("config_hash").get<std::string>().size() != 16)
        return "config_hash must have 16 hex digits";
    if (!doc.contains("config"))
        return "missing key 'config'";
    try
    {
        parse_config(doc.at("config"));
    }
    catch (std::exception const& e)
    {
        return std::string("embedded config is invalid: ") + e.what();
    }
    return {};
}

std::string check_deterministic_schema(json const& doc)
{
    using vt = json::value_t;
    if (!doc.is_object())
        return "report is not an object";
    for (char const* key : {"m", "L"})
    {
        if (!doc.contains(key))
            return std::string("missing key '") + key + "'";
    }
    if (!doc.at("m").is_number_integer())
        return "m must be an integer";
    if (!doc.at("L").is_null() && !doc.at("L").is_number_integer())
        return "L must be an integer or null";
    for (char const* key : {"r", "rho_L", "dim"})
    {
        if (auto err = require_field(doc, key, vt::number_float); !err.empty())
            return err;
    }
    if (doc.contains("checks"))
    {
        auto const& checks = doc.at("checks");
        if (!checks.is_object())
            return "checks must be an object";
        for (auto const& [key, value] : checks.items())
        {
            if (!value.is_boolean())
                return "check '" + key + "' must be a boolean";
        }
    }
    return {};
}

//---------------------------------------------------------------------------//
std::string format_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string table1_csv(std::vector<Table1Row> const& rows)
{
    std::ostringstream out;
    out << "m,p,lower,dim_Fm,upper\n";
    for (auto const& row : rows)
    {
        out << row.m << ',' << format_number(row.p) << ','
            << format_number(row.lower) << ',' << format_number(row.dim_fm)
            << ',' << format_number(row.upper) << '\n';
    }
    return out.str();
}

std::string figure1_csv(std::vector<Figure1Row> const& rows)
{
    std::ostringstream out;
    out << "p,lower,upper\n";
    for (auto const& row : rows)
    {
        out << format_number(row.p) << ',' << format_number(row.lower) << ','
            << format_number(row.upper) << '\n';
    }
    return out.str();
}

std::string levels_csv(TrialResults const& results)
{
    std::ostringstream out;
    out << "level,z_mean,z_var,z_min,z_max\n";
    for (auto const& s : results.levels)
    {
        out << s.level << ',' << format_number(s.mean) << ','
            << format_number(s.variance) << ',' << s.min << ',' << s.max
            << '\n';
    }
    return out.str();
}

std::string bounds_csv(BoundsReport const& report)
{
    std::ostringstream out;
    out << "lower,upper,trivial_upper,sandwich,entropy_threshold,"
           "geometric_threshold,lambda,exact,exact_reason\n";
    out << format_number(report.lower) << ',' << format_number(report.upper)
        << ',' << format_number(report.trivial_upper) << ','
        << to_string(report.sandwich.status) << ','
        << format_number(report.sandwich.entropy_threshold) << ','
        << format_number(report.sandwich.geometric_threshold) << ','
        << (report.lambda ? format_number(report.lambda->lambda) : "") << ','
        << (report.exact ? format_number(*report.exact) : "") << ','
        << (report.exact_reason ? std::string(to_string(*report.exact_reason))
                                : "")
        << '\n';
    return out.str();
}

//---------------------------------------------------------------------------//
}  // namespace cantorflip
