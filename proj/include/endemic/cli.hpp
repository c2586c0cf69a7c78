/*
* Copyright (C) 2026 the endemic-dde authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef ENDEMIC_CLI_HPP
#define ENDEMIC_CLI_HPP

#include "endemic/diagnostics.hpp"
#include "endemic/model.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace endemic
{

enum class ExitCode : int
{
    ok          = 0,
    config      = 2,
    solver      = 3,
    diagnostics = 4,
    io          = 5,
};

/// Which dynamics to integrate: the continuous-kernel model or one of the
/// discrete lag models.
struct ModelChoice
{
    std::string name = "continuous"; ///< continuous | d1 | d3 | d60 | custom
    std::optional<LagSchemePair> schemes;

    bool is_continuous() const
    {
        return !schemes.has_value();
    }

    static ModelChoice parse(std::string_view name); ///< preset names only
    static ModelChoice custom(LagSchemePair schemes);
};

struct RunSpec
{
    ScenarioConfig scenario;
    ModelChoice model;
    std::filesystem::path out_dir = ".";
    bool diagnostics              = true;
    std::optional<std::filesystem::path> compare_csv;
};

/// Scenario file support. The file is JSON with optional sections; it may
/// start from a named preset and override fields one by one. See the README
/// for the schema.
ScenarioConfig scenario_from_json_file(const std::filesystem::path& path);
ModelChoice model_from_json_file(const std::filesystem::path& path); ///< "continuous" if absent

/// Runs one simulation: writes trajectory.csv, a diagnostics report
/// (diagnostics.txt + diagnostics.kv) and, when a reference CSV is given, a
/// comparison report (comparison.txt). Returns ExitCode::diagnostics when an
/// enabled diagnostic fails.
ExitCode run(const RunSpec& spec, std::ostream& log);

struct ConvergenceResult
{
    std::array<std::string, 3> presets{"d1", "d3", "d60"};
    std::array<TrajectoryDistance, 3> gaps;
    std::array<bool, num_compartments> monotone; ///< gap strictly decreases d1 -> d3 -> d60
    bool all_monotone;
};

/// Reproduces the lag-refinement study: solves the continuous model as the
/// reference and the three discrete presets (concurrently), tabulates the
/// per-compartment sup-norm gaps and checks that they shrink as the number of
/// lags grows. Writes per-model CSVs, the gap table and a plot script.
ConvergenceResult convergence_experiment(const ScenarioConfig& cfg,
                                         const std::filesystem::path& out_dir, std::ostream& log,
                                         double compare_spacing = 1.0);

} // namespace endemic

#endif // ENDEMIC_CLI_HPP
