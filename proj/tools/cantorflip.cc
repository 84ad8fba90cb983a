//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/cantorflip.cc
//! \brief Command-line driver: bounds, tables, simulation, exact recursions,
//!        and the deterministic labeling.
//---------------------------------------------------------------------------//
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cantorflip/Bounds.hh"
#include "cantorflip/Deterministic.hh"
#include "cantorflip/Errors.hh"
#include "cantorflip/Exact.hh"
#include "cantorflip/Experiment.hh"
#include "cantorflip/Stochastic.hh"

using namespace cantorflip;
using nlohmann::json;

namespace
{
//---------------------------------------------------------------------------//
constexpr int exit_validation = 2;
constexpr int exit_budget = 3;

//! Flags shared by all subcommands; set values override the config file.
struct Overrides
{
    std::string config_path;
    std::string out_path;
    std::string summary_path;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<int> num_maps;
    std::optional<int> arity;
    std::optional<std::string> probs;
    std::optional<double> ratio;
    std::optional<int> depth;
    std::optional<std::uint64_t> trials;
    std::optional<int> period;
    std::optional<int> offset;
    std::optional<int> level;
    std::optional<std::string> window;
    std::optional<double> energy_t;
    int grid{99};
    int m_max{0};
    std::string table{"expected"};
    std::string words_path;
};

std::vector<double> parse_list(std::string const& text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size())
            {
                throw std::invalid_argument(item);
            }
        }
        catch (std::exception const&)
        {
            throw ValidationError("cannot parse number '" + item + "'");
        }
    }
    return values;
}

ExperimentConfig build_config(Overrides const& o)
{
    ExperimentConfig c;
    if (!o.config_path.empty())
    {
        c = load_config(o.config_path);
    }
    if (o.num_maps)
        c.num_maps = *o.num_maps;
    if (o.arity)
        c.arity = *o.arity;
    if (o.probs)
        c.probs = parse_list(*o.probs);
    if (o.ratio)
        c.ratio = *o.ratio;
    if (o.depth)
        c.depth = *o.depth;
    if (o.trials)
        c.trials = *o.trials;
    if (o.seed)
        c.master_seed = *o.seed;
    if (o.period)
        c.period = *o.period;
    if (o.offset)
        c.offset = *o.offset;
    if (o.energy_t)
        c.energy_t = *o.energy_t;
    if (o.window)
    {
        auto w = parse_list(*o.window);
        if (w.size() != 2)
        {
            throw ValidationError("--window expects FIRST,LAST");
        }
        c.window = {static_cast<int>(w[0]), static_cast<int>(w[1])};
    }
    c.validate();
    return c;
}

void emit(std::string const& text, std::string const& path)
{
    if (path.empty() || path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw ValidationError("cannot write output file '" + path + "'");
    }
    out << text;
}

std::string json_text(json const& doc)
{
    return doc.dump(2) + "\n";
}

unsigned int thread_count()
{
    unsigned int threads = std::max(1u, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("CANTORFLIP_THREADS"))
    {
        try
        {
            int const cap = std::stoi(env);
            if (cap >= 1)
            {
                threads = std::min(threads, static_cast<unsigned int>(cap));
            }
        }
        catch (std::exception const&)
        {
            throw ValidationError("CANTORFLIP_THREADS must be an integer");
        }
    }
    return threads;
}

//---------------------------------------------------------------------------//
// SUBCOMMANDS
//---------------------------------------------------------------------------//
void cmd_bounds(Overrides const& o)
{
    auto const c = build_config(o);
    auto const report = classify(c.prob_vector(), c.arity, c.ratio);
    if (o.format == "csv")
    {
        emit(bounds_csv(report), o.out_path);
        return;
    }
    auto doc = to_json(report);
    doc["N"] = c.num_maps;
    doc["M"] = c.arity;
    doc["r"] = c.ratio;
    doc["p"] = c.prob_vector().values();
    emit(json_text(doc), o.out_path);
}

void cmd_table1(Overrides const& o)
{
    double const ratio = o.ratio.value_or(1.0 / 3);
    auto const rows = table1(ratio);
    if (o.format == "json")
    {
        json doc = json::array();
        for (auto const& row : rows)
        {
            doc.push_back({{"m", row.m},
                           {"p", row.p},
                           {"lower", row.lower},
                           {"dim_Fm", row.dim_fm},
                           {"upper", row.upper}});
        }
        emit(json_text(doc), o.out_path);
        return;
    }
    emit(table1_csv(rows), o.out_path);
}

void cmd_figure1(Overrides const& o)
{
    emit(figure1_csv(figure1(o.grid, o.ratio.value_or(1.0 / 3))), o.out_path);
}

void cmd_simulate(Overrides const& o)
{
    auto c = build_config(o);
    if (c.window.last > c.depth)
    {
        throw ValidationError("regression window ends beyond the simulated "
                              "depth");
    }
    TrialOptions opts;
    opts.arity = c.arity;
    opts.depth = c.depth;
    opts.trials = c.trials;
    opts.master_seed = c.master_seed;
    opts.threads = thread_count();
    auto const results = run_trials(c.ifs(), c.prob_vector(), opts);

    std::vector<double> means;
    for (auto const& s : results.levels)
    {
        means.push_back(s.mean);
    }
    double const estimate = estimate_dim(means, c.ratio, c.window);
    auto const summary = summary_json(c, results, estimate);

    std::string csv_path = o.out_path.empty() ? c.csv_output : o.out_path;
    std::string json_path = o.summary_path.empty() ? c.json_output
                                                   : o.summary_path;
    if (o.format == "json")
    {
        emit(json_text(summary), csv_path);
        if (!json_path.empty())
        {
            emit(json_text(summary), json_path);
        }
        return;
    }
    emit(levels_csv(results), csv_path);
    if (!json_path.empty())
    {
        emit(json_text(summary), json_path);
    }
}

void cmd_exact(Overrides const& o)
{
    auto const c = build_config(o);
    int const n_max = o.level.value_or(10);
    if (n_max < 0)
    {
        throw ValidationError("--n must be non-negative");
    }
    std::ostringstream out;
    if (o.table == "pi")
    {
        auto const seq = pi_sequence(c.num_maps, c.arity, n_max);
        out << "n,value\n";
        for (std::size_t n = 0; n < seq.values.size(); ++n)
        {
            out << n << ',' << format_number(seq.values[n]) << '\n';
        }
    }
    else if (o.table == "expected")
    {
        auto const probs = c.prob_vector();
        out << "n,value,bound\n";
        for (int n = 0; n <= n_max; ++n)
        {
            out << n << ',' << format_number(expected_zn(probs, c.arity, n))
                << ',' << format_number(multinomial_bound(probs, c.arity, n))
                << '\n';
        }
    }
    else
    {
        throw ValidationError("--table must be 'expected' or 'pi'");
    }
    emit(out.str(), o.out_path);
}

void cmd_deterministic(Overrides const& o)
{
    auto const c = build_config(o);
    if (o.m_max > 0)
    {
        std::ostringstream out;
        out << "m,L,rho_L,dim_Fm\n";
        for (int m = 2; m <= o.m_max; ++m)
        {
            out << m << ',';
            if (m == 2)
            {
                out << ",2,";
            }
            else
            {
                int const level = level_of(m);
                out << level << ',' << format_number(rho(level)) << ',';
            }
            out << format_number(dim_Fm(m, c.ratio)) << '\n';
        }
        emit(out.str(), o.out_path);
        return;
    }

    int const m = c.period;
    DeterministicSpec spec{m, c.offset.value_or(m - 1)};
    spec.validate();
    json doc{{"m", m}, {"offset", spec.offset}, {"r", c.ratio}};
    if (m == 2)
    {
        doc["L"] = nullptr;
        doc["rho_L"] = 2.0;
        doc["note"] = "F_2 = C: every path word occurs";
    }
    else
    {
        int const level = level_of(m);
        doc["L"] = level;
        doc["rho_L"] = rho(level);
    }
    doc["dim"] = dim_Fm(m, c.ratio);

    if (o.level)
    {
        int const n = *o.level;
        auto const tree = tree_words(spec, n);
        doc["n"] = n;
        doc["counts"] = {{"tree", tree.size()}};
        if (tree.size() <= 64)
        {
            doc["words"] = tree.strings();
        }
        json checks = json::object();
        if (m >= 3)
        {
            auto const graph = graph_words(m, n);
            auto const sft = sft_words(level_of(m), n);
            doc["counts"]["graph"] = graph.size();
            doc["counts"]["sft"] = sft.size();
            bool const default_offset = spec.offset == m - 1;
            checks["tree_equals_graph"] = tree == graph;
            checks["tree_subset_sft"] = tree.subset_of(sft);
            checks["tree_equals_sft"] = tree == sft;
            checks["default_offset"] = default_offset;
        }
        doc["checks"] = checks;
        if (!o.words_path.empty())
        {
            std::ostringstream words;
            for (auto const& w : tree.strings())
            {
                words << w << '\n';
            }
            emit(words.str(), o.words_path);
        }
    }
    if (o.format == "csv")
    {
        std::ostringstream out;
        out << "m,L,rho_L,dim_Fm\n"
            << m << ',' << (m == 2 ? "" : std::to_string(level_of(m))) << ','
            << format_number(doc["rho_L"].get<double>()) << ','
            << format_number(doc["dim"].get<double>()) << '\n';
        emit(out.str(), o.out_path);
        return;
    }
    emit(json_text(doc), o.out_path);
}

/*!
 * One simulated trial; the truncated energy is reported per level together
 * with the truncation scale r^n.
 */
void cmd_energy(Overrides const& o)
{
    auto const c = build_config(o);
    auto const spec = c.ifs();
    auto const probs = c.prob_vector();
    RngStream rng(trial_seed(c.master_seed, 0));
    auto occ = OccupancyMap::root(probs.size());
    std::ostringstream out;
    out << "level,energy,scale,z\n";
    for (int level = 1; level <= c.depth; ++level)
    {
        occ = evolve(occ, probs, c.arity, rng);
        if (z_n(occ) > 20000)
        {
            throw BudgetError("energy diagnostic limited to 20000 occupied "
                              "intervals per level");
        }
        out << level << ','
            << format_number(energy_estimate(occ, spec, c.energy_t)) << ','
            << format_number(std::pow(c.ratio, level)) << ',' << z_n(occ)
            << '\n';
    }
    emit(out.str(), o.out_path);
}

//---------------------------------------------------------------------------//
void add_common(CLI::App& cmd, Overrides& o)
{
    cmd.add_option("--config", o.config_path, "JSON experiment config");
    cmd.add_option("--out", o.out_path, "Output path (default: stdout)");
    cmd.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd.add_option("--seed", o.seed, "Master seed");
    cmd.add_option("--N", o.num_maps, "Number of maps");
    cmd.add_option("--M", o.arity, "Tree arity");
    cmd.add_option("--p", o.probs, "Comma-separated probabilities");
    cmd.add_option("--r", o.ratio, "Contraction ratio");
}
}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char** argv)
{
    CLI::App app{"Random and deterministic subsets of Cantor sets generated "
                 "by labeled trees"};
    app.require_subcommand(1);
    Overrides o;

    auto* bounds = app.add_subcommand("bounds", "Dimension bounds report");
    add_common(*bounds, o);

    auto* table = app.add_subcommand("table1",
                                     "Deterministic dimension vs. bounds");
    add_common(*table, o);

    auto* fig = app.add_subcommand("figure1", "Bound curves for N = M = 2");
    add_common(*fig, o);
    fig->add_option("--grid", o.grid, "Number of interior grid points")
        ->check(CLI::Range(3, 1'000'000));

    auto* sim = app.add_subcommand("simulate", "Monte Carlo occupancy runs");
    add_common(*sim, o);
    sim->add_option("--depth", o.depth, "Tree depth");
    sim->add_option("--trials", o.trials, "Number of trials");
    sim->add_option("--window", o.window, "Regression levels FIRST,LAST");
    sim->add_option("--summary", o.summary_path, "JSON summary path");

    auto* ex = app.add_subcommand("exact", "Exact recursions");
    add_common(*ex, o);
    ex->add_option("--n", o.level, "Largest level");
    ex->add_option("--table", o.table, "expected | pi")
        ->check(CLI::IsMember({"expected", "pi"}));

    auto* det = app.add_subcommand("deterministic",
                                   "Every m-th edge labeled 1");
    add_common(*det, o);
    det->add_option("--m", o.period, "Labeling period");
    det->add_option("--offset", o.offset, "Labeled residue (default m-1)");
    det->add_option("--n", o.level, "Word length for generator checks");
    det->add_option("--words", o.words_path, "Dump tree words to this file");
    det->add_option("--m-max", o.m_max, "Emit the dimension table for "
                                        "m = 2..MAX");

    auto* energy = app.add_subcommand("energy", "Discrete t-energy "
                                                "diagnostic");
    add_common(*energy, o);
    energy->add_option("--depth", o.depth, "Deepest level");
    energy->add_option("--t", o.energy_t, "Energy exponent");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }

    try
    {
        if (*bounds)
            cmd_bounds(o);
        else if (*table)
            cmd_table1(o);
        else if (*fig)
            cmd_figure1(o);
        else if (*sim)
            cmd_simulate(o);
        else if (*ex)
            cmd_exact(o);
        else if (*det)
            cmd_deterministic(o);
        else if (*energy)
            cmd_energy(o);
    }
    catch (ValidationError const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    catch (BudgetError const& e)
    {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    }
    return 0;
}
