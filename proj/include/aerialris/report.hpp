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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aerialris/monte_carlo.hpp"
#include "aerialris/oracle.hpp"
#include "aerialris/pipeline.hpp"

namespace aerialris
{

inline constexpr const char *sweep_csv_header =
    "axis,value,method,mean_dbm,median_dbm,fullarray_rate,feasible_rate,trials,seed";

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

// Median total power against the swept value, one polyline per method.
void write_sweep_svg(std::ostream &out, const std::vector<SweepRow> &rows);

nlohmann::json solution_json(const Scenario &sc, const SetupResult &r);

// Human-readable digest of one run.
void write_summary(std::ostream &out, const Scenario &sc, const SetupResult &r);

struct OracleComparison
{
    std::uint64_t seed = 0;
    double proposed_w = 0.0;
    double oracle_w = 0.0;

    double gap_percent() const { return 100.0 * (proposed_w - oracle_w) / oracle_w; }
};

void write_oracle_csv(std::ostream &out, const std::vector<OracleComparison> &rows, std::size_t resolution);

// Shortest round-trip-safe decimal for CSV and SVG output.
std::string format_number(double v);

} // namespace aerialris
