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

#include <stdexcept>
#include <string>
#include <utility>

namespace aerialris
{

// Invalid numeric input (zero-length vectors, non-positive frequencies, angles out of range).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The per-UAV placement cubic has fewer than three real roots, so the
// near-origin minimizer is undefined for this geometry.
class GeometryRegimeError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Element-count partition cannot satisfy sum(N_i) = N under the outlier cap.
class PartitionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Power assignment hit an exact array-factor null.
class NullGainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Fixed-point iteration hit its iteration cap; carries the last iterate.
class ConvergenceError : public std::runtime_error
{
public:
    ConvergenceError(const std::string &what, double x, double y, double z)
        : std::runtime_error(what), last_{x, y, z} {}

    const double *last_iterate() const noexcept { return last_; }

private:
    double last_[3];
};

// Exhaustive grid larger than the configured evaluation budget.
class ResourceGuardError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Wraps a solver failure with the pipeline stage it came from.
class StageError : public std::runtime_error
{
public:
    StageError(std::string stage, const std::string &what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string &stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace aerialris
