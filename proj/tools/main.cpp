// SPDX-License-Identifier: Apache-2.0
//
// aerialris: placement, partitioning and power planning for aerial-RIS backhaul
// Copyright (C) 2026 The aerialris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aerialris/config.hpp"
#include "aerialris/monte_carlo.hpp"
#include "aerialris/oracle.hpp"
#include "aerialris/pipeline.hpp"
#include "aerialris/random.hpp"
#include "aerialris/report.hpp"

namespace fs = std::filesystem;
using namespace aerialris;

namespace
{

struct Common
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string out_dir = ".";
};

RunConfig load(const Common &c)
{
    ParsedConfig parsed = load_config(c.config_path);
    for (const auto &w : parsed.warnings)
        std::cerr << "warning: " << w << '\n';
    if (c.seed)
        parsed.config.seed = *c.seed;
    if (c.trials)
        parsed.config.trials = *c.trials;
    return parsed.config;
}

std::ofstream open_out(const Common &c, const std::string &name)
{
    fs::create_directories(c.out_dir);
    const fs::path p = fs::path(c.out_dir) / name;
    std::ofstream f(p);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    std::cerr << "wrote " << p.string() << '\n';
    return f;
}

int cmd_run(const Common &c)
{
    const RunConfig cfg = load(c);
    const Scenario sc = generate_scenario(cfg.scenario, cfg.seed);
    const SetupResult r = run_proposed(sc);
    write_summary(std::cout, sc, r);
    open_out(c, "solution_seed" + std::to_string(cfg.seed) + ".json") << solution_json(sc, r).dump(2) << '\n';
    return 0;
}

int cmd_sweep(const Common &c, const std::string &axis_name, const std::vector<double> &values)
{
    const auto axis = parse_axis(axis_name);
    if (!axis)
        throw CLI::ValidationError("--axis", "unknown axis '" + axis_name + "' (bandwidth, elements, distance, height)");
    const RunConfig cfg = load(c);
    SweepSpec spec{*axis, values, cfg.trials, cfg.seed};
    const std::vector<Method> methods(std::begin(all_methods), std::end(all_methods));
    const auto rows = monte_carlo(cfg.scenario, spec, methods);
    const std::string stem = "sweep_" + axis_name + "_seed" + std::to_string(cfg.seed);
    {
        auto f = open_out(c, stem + ".csv");
        write_sweep_csv(f, rows);
    }
    {
        auto f = open_out(c, stem + ".svg");
        write_sweep_svg(f, rows);
    }
    write_sweep_csv(std::cout, rows);
    return 0;
}

int cmd_oracle(const Common &c, std::size_t resolution)
{
    const RunConfig cfg = load(c);
    if (cfg.scenario.m0 > 8)
        std::cerr << "warning: oracle search with m0 = " << cfg.scenario.m0 << " is slow; m0 <= 8 recommended\n";
    std::vector<OracleComparison> rows(cfg.trials);
    parallel_for(cfg.trials, [&](std::size_t t) {
        const std::uint64_t seed = derive_seed(cfg.seed, t);
        const Scenario sc = generate_scenario(cfg.scenario, seed);
        rows[t] = {seed, run_proposed(sc).power.total, exhaustive_oracle(sc, resolution).power.total};
    });
    auto f = open_out(c, "oracle_seed" + std::to_string(cfg.seed) + ".csv");
    write_oracle_csv(f, rows, resolution);
    write_oracle_csv(std::cout, rows, resolution);
    std::vector<double> gaps;
    for (const auto &r : rows)
        gaps.push_back(r.gap_percent());
    std::cout << "median gap " << median(gaps) << " %\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Aerial-RIS backhaul planner: RIS placement, array partitioning and source power"};
    app.require_subcommand(1);
    app.footer("Config keys (key = value, '#' comments):\n" + config_reference());

    Common common;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("config", common.config_path, "Config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", common.seed, "Master seed (overrides config)");
        sub->add_option("--trials", common.trials, "Monte-Carlo trials (overrides config)");
        sub->add_option("--out", common.out_dir, "Output directory");
    };

    auto *run = app.add_subcommand("run", "Solve one scenario and write its solution record");
    add_common(run);

    std::string axis;
    std::vector<double> values;
    auto *sweep = app.add_subcommand("sweep", "Sweep one parameter over all methods");
    add_common(sweep);
    sweep->add_option("--axis", axis, "bandwidth | elements | distance | height")->required();
    sweep->add_option("--values", values, "Comma-separated values")->required()->delimiter(',');

    std::size_t resolution = 21;
    auto *oracle = app.add_subcommand("oracle", "Compare the proposed setup against exhaustive grid search");
    add_common(oracle);
    oracle->add_option("--resolution", resolution, "Grid points per axis")->check(CLI::Range(2, 100000));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e);
    }

    try
    {
        if (*run)
            return cmd_run(common);
        if (*sweep)
            return cmd_sweep(common, axis, values);
        if (*oracle)
            return cmd_oracle(common, resolution);
    }
    catch (const CLI::ValidationError &e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
