//---------------------------------*-C++-*-----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/CliTest.cc
//! \brief Runs the command-line tool as a subprocess.
//---------------------------------------------------------------------------//
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "json.hpp"

namespace cantorflip
{
namespace test
{
using nlohmann::json;

namespace
{
struct RunResult
{
    int exit_code{-1};
    std::string out;
};

RunResult run(std::string const& args, std::string const& env = {})
{
    std::string const cmd = env + (env.empty() ? "" : " ")
                            + CANTORFLIP_CLI_PATH + " " + args
                            + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return result;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, n);
    int const status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(std::string const& name)
{
    auto dir = std::filesystem::temp_directory_path() / "cantorflip_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}
}  // namespace

TEST(CliTest, bounds_symmetric)
{
    auto const r = run("bounds --N 2 --M 2 --p 0.5,0.5 --r 0.333333");
    ASSERT_EQ(0, r.exit_code);
    auto const doc = json::parse(r.out);
    EXPECT_NEAR(0.631, doc.at("lower").get<double>(), 5e-4);
    EXPECT_NEAR(0.631, doc.at("upper").get<double>(), 5e-4);
}

TEST(CliTest, bounds_small_arity_exact)
{
    auto const r = run("bounds --N 3 --M 2 --p 0.2,0.2,0.6 --r 0.3");
    ASSERT_EQ(0, r.exit_code);
    auto const doc = json::parse(r.out);
    ASSERT_TRUE(doc.at("exact").is_number());
    EXPECT_NEAR(std::log(2.0) / -std::log(0.3), doc.at("exact").get<double>(),
                1e-12);
}

TEST(CliTest, exit_codes)
{
    EXPECT_EQ(2, run("bounds --N 2 --p 0.5,0.4 --r 0.3").exit_code);
    EXPECT_EQ(2, run("bounds --N 2 --r 0.7").exit_code);
    EXPECT_EQ(2, run("bounds --bogus-flag").exit_code);
    EXPECT_EQ(2, run("bounds --config /nonexistent.json").exit_code);
    EXPECT_EQ(3, run("simulate --depth 70 --trials 2").exit_code);
    EXPECT_EQ(3, run("exact --n 30 --table expected").exit_code);
}

TEST(CliTest, table1_matches_library_shape)
{
    auto const r = run("table1");
    ASSERT_EQ(0, r.exit_code);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ("m,p,lower,dim_Fm,upper", line);
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    EXPECT_EQ(8, rows);
}

TEST(CliTest, simulate_is_deterministic_across_threads)
{
    auto const a = scratch("a.csv");
    auto const b = scratch("b.csv");
    auto const sa = scratch("a.json");
    auto const sb = scratch("b.json");
    std::string const args = "simulate --N 2 --M 2 --r 0.333333333333 "
                             "--depth 12 --trials 40 --seed 5 --window 4,12";
    ASSERT_EQ(0,
              run(args + " --out " + a.string() + " --summary " + sa.string(),
                  "CANTORFLIP_THREADS=1")
                  .exit_code);
    ASSERT_EQ(0,
              run(args + " --out " + b.string() + " --summary " + sb.string(),
                  "CANTORFLIP_THREADS=4")
                  .exit_code);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(sa), slurp(sb));
    EXPECT_FALSE(slurp(a).empty());
    auto const summary = json::parse(slurp(sa));
    EXPECT_EQ(5u, summary.at("master_seed").get<std::uint64_t>());
    EXPECT_EQ(16u, summary.at("config_hash").get<std::string>().size());
}

TEST(CliTest, config_file_with_flag_override)
{
    auto const cfg = scratch("cfg.json");
    {
        std::ofstream out(cfg);
        out << R"({"N": 2, "r": 0.25, "p": [0.3, 0.7], "M": 2})";
    }
    auto const base = run("bounds --config " + cfg.string());
    ASSERT_EQ(0, base.exit_code);
    EXPECT_EQ(0.25, json::parse(base.out).at("r").get<double>());

    auto const over = run("bounds --config " + cfg.string() + " --r 0.2");
    ASSERT_EQ(0, over.exit_code);
    EXPECT_EQ(0.2, json::parse(over.out).at("r").get<double>());
}

TEST(CliTest, deterministic_reports)
{
    auto const m3 = run("deterministic --m 3 --n 3 --r 0.3333333333333333");
    ASSERT_EQ(0, m3.exit_code);
    auto const doc = json::parse(m3.out);
    EXPECT_NEAR(0.438, doc.at("dim").get<double>(), 5e-4);
    EXPECT_EQ((std::vector<std::string>{"000", "001", "010"}),
              doc.at("words").get<std::vector<std::string>>());
    for (auto const& [key, value] : doc.at("checks").items())
        EXPECT_TRUE(value.get<bool>()) << key;

    auto const m2 = json::parse(run("deterministic --m 2").out);
    EXPECT_NEAR(0.631, m2.at("dim").get<double>(), 5e-4);
    EXPECT_NE(std::string::npos,
              m2.at("note").get<std::string>().find("F_2 = C"));

    auto const m6 = json::parse(run("deterministic --m 6").out);
    EXPECT_NEAR(0.438, m6.at("dim").get<double>(), 5e-4);
}

TEST(CliTest, exact_and_energy_tables)
{
    auto const pi = run("exact --table pi --n 8");
    ASSERT_EQ(0, pi.exit_code);
    EXPECT_NE(std::string::npos, pi.out.find("8,0.300357185"));

    auto const energy = run("energy --depth 6 --seed 3");
    ASSERT_EQ(0, energy.exit_code);
    EXPECT_EQ(0u, energy.out.rfind("level,energy,scale,z\n", 0));

    auto const fig = run("figure1 --grid 9 --format csv");
    ASSERT_EQ(0, fig.exit_code);
    EXPECT_NE(std::string::npos, fig.out.find("0.5,0.630929754,0.630929754"));
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace cantorflip
