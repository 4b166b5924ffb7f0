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

#include <doctest.h>

#include <sstream>

#include "aerialris/config.hpp"
#include "aerialris/report.hpp"

using namespace aerialris;

TEST_CASE("empty config keeps defaults")
{
    std::istringstream in("");
    const auto p = parse_config(in);
    const ScenarioConfig def;
    CHECK(p.warnings.empty());
    CHECK(p.config.scenario.ris.n_elements == def.ris.n_elements);
    CHECK(p.config.scenario.backhaul_bandwidth == 50e6);
    CHECK(p.config.scenario.center == Vec2{1000, 0});
    CHECK(p.config.scenario.source.max_power_w == doctest::Approx(1000.0));
    CHECK(p.config.trials == 100);
}

TEST_CASE("keys, comments and units")
{
    std::istringstream in("# comment\n"
                          "n_elements = 400   # trailing\n"
                          "center = 1500, 20\n"
                          "p_max = 20\n"
                          "seed = 7\n"
                          "bogus_key = 1\n");
    const auto p = parse_config(in, "x.cfg");
    CHECK(p.config.scenario.ris.n_elements == 400);
    CHECK(p.config.scenario.center == Vec2{1500, 20});
    CHECK(p.config.scenario.source.max_power_w == doctest::Approx(100.0));
    CHECK(p.config.seed == 7);
    REQUIRE(p.warnings.size() == 1);
    CHECK(p.warnings[0].find("x.cfg:6: unknown key 'bogus_key'") != std::string::npos);
}

TEST_CASE("malformed lines carry their line number")
{
    std::istringstream a("n_elements = 300\nthis line has no equals\n");
    try
    {
        parse_config(a, "m.cfg");
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).rfind("m.cfg:2:", 0) == 0);
    }
    std::istringstream b("\n\nn_elements = abc\n");
    CHECK_THROWS_AS(parse_config(b), ConfigError);
    std::istringstream c("element_spacing_norm = 0.5\n");
    CHECK_THROWS_AS(parse_config(c), ConfigError);
    CHECK_FALSE(config_reference().empty());
}

TEST_CASE("sweep CSV and SVG")
{
    std::vector<SweepRow> rows;
    for (double v : {25e6, 50e6})
        for (Method m : all_methods)
        {
            SweepRow r;
            r.value = v;
            r.method = m;
            r.mean_dbm = 40 + v / 1e7;
            r.median_dbm = 41;
            r.trials = 3;
            r.seed = 5;
            rows.push_back(r);
        }
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    const std::string s = csv.str();
    CHECK(s.rfind(std::string(sweep_csv_header) + "\n", 0) == 0);
    CHECK(s.find("bandwidth,25000000,proposed,") != std::string::npos);

    std::ostringstream svg;
    write_sweep_svg(svg, rows);
    const std::string g = svg.str();
    std::size_t series = 0;
    for (std::size_t pos = 0; (pos = g.find("class=\"series\"", pos)) != std::string::npos; ++pos)
        ++series;
    CHECK(series == std::size(all_methods));
    CHECK(g.find("seed=5") != std::string::npos);
}

TEST_CASE("solution JSON and oracle CSV")
{
    ScenarioConfig cfg;
    cfg.n_users = 30;
    cfg.m0 = 3;
    const auto sc = generate_scenario(cfg, 2);
    const auto r = run_proposed(sc);
    const auto j = solution_json(sc, r);
    CHECK(j["seed"] == 2);
    CHECK(j["uavs"].size() == 3);
    CHECK(j["phases_rad"].size() == cfg.ris.n_elements);
    CHECK(j["total_power_w"].get<double>() == doctest::Approx(r.power.total));
    CHECK(j.contains("feasible"));
    CHECK(j["plan"].contains("mode"));

    const OracleComparison oc{4, 1.1, 1.0};
    CHECK(oc.gap_percent() == doctest::Approx(10.0));
    std::ostringstream o;
    write_oracle_csv(o, {oc}, 21);
    CHECK(o.str().rfind("seed,resolution,proposed_dbm,oracle_dbm,proposed_w,oracle_w,gap_percent\n", 0) == 0);
    CHECK(format_number(0.5) == "0.5");
}
