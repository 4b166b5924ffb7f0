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

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aerialris/scenario.hpp"

namespace aerialris
{

struct RunConfig
{
    ScenarioConfig scenario;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

class ConfigError : public std::runtime_error
{
public:
    ConfigError(const std::string &source, std::size_t line, const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct ParsedConfig
{
    RunConfig config;
    std::vector<std::string> warnings; // unknown keys
};

// Flat "key = value" lines; '#' starts a comment.  Absent keys keep their
// defaults, unknown keys are reported as warnings, anything unparsable throws
// ConfigError with the line number.
ParsedConfig parse_config(std::istream &in, const std::string &source = "<config>");
ParsedConfig load_config(const std::string &path);

// One line per key with its unit and default, for --help output and docs.
std::string config_reference();

} // namespace aerialris
