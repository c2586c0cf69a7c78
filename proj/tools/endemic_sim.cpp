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
#include "endemic/cli.hpp"
#include "endemic/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace
{

struct CommonArgs
{
    std::string preset = "ebola";
    std::string config_path;
    std::string model = "continuous";
    std::optional<double> horizon;
    std::optional<double> rtol;
    std::optional<double> atol;
    std::optional<double> sample_spacing;
    std::string out_dir = "out";
    std::string compare_csv;
    std::string diagnostics = "on";
};

void add_common_flags(CLI::App& cmd, CommonArgs& args)
{
    cmd.add_option("--preset", args.preset, "scenario preset name")->capture_default_str();
    cmd.add_option("--config", args.config_path, "scenario config file (JSON)");
    cmd.add_option("--horizon", args.horizon, "simulation horizon in days");
    cmd.add_option("--rtol", args.rtol, "relative step tolerance");
    cmd.add_option("--atol", args.atol, "absolute step tolerance");
    cmd.add_option("--sample-spacing", args.sample_spacing, "CSV export grid spacing in days");
    cmd.add_option("--out", args.out_dir, "output directory")->capture_default_str();
}

endemic::ScenarioConfig build_scenario(const CommonArgs& args)
{
    endemic::ScenarioConfig cfg = args.config_path.empty()
                                      ? endemic::scenario_preset(args.preset)
                                      : endemic::scenario_from_json_file(args.config_path);
    if (args.horizon) {
        cfg.horizon = *args.horizon;
    }
    if (args.rtol) {
        cfg.control.rtol = *args.rtol;
    }
    if (args.atol) {
        cfg.control.atol = *args.atol;
    }
    if (args.sample_spacing) {
        cfg.sample_spacing = *args.sample_spacing;
    }
    cfg.validate();
    return cfg;
}

int failure(endemic::ExitCode code, const char* kind, const std::exception& err)
{
    std::cerr << kind << ": " << err.what() << "\n";
    return static_cast<int>(code);
}

} // namespace

int main(int argc, char** argv)
{
    using endemic::ExitCode;

    CLI::App app{"Endemic-model simulator with distributed and discrete delays"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate one scenario and write artifacts");
    add_common_flags(*run_cmd, run_args);
    run_cmd->add_option("--model", run_args.model, "continuous, d1, d3 or d60")
        ->capture_default_str();
    run_cmd->add_option("--compare", run_args.compare_csv,
                        "reference trajectory CSV for a sup-norm comparison");
    run_cmd->add_option("--diagnostics", run_args.diagnostics, "on or off")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();

    CommonArgs conv_args;
    CLI::App* conv_cmd = app.add_subcommand(
        "convergence", "compare the discrete lag presets against the continuous solution");
    add_common_flags(*conv_cmd, conv_args);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::config);
    }

    try {
        if (run_cmd->parsed()) {
            endemic::RunSpec spec;
            spec.scenario = build_scenario(run_args);
            spec.model    = (!run_args.config_path.empty() && run_cmd->count("--model") == 0)
                                ? endemic::model_from_json_file(run_args.config_path)
                                : endemic::ModelChoice::parse(run_args.model);
            spec.out_dir     = run_args.out_dir;
            spec.diagnostics = run_args.diagnostics == "on";
            if (!run_args.compare_csv.empty()) {
                spec.compare_csv = run_args.compare_csv;
            }
            return static_cast<int>(endemic::run(spec, std::cout));
        }
        const endemic::ScenarioConfig cfg = build_scenario(conv_args);
        const auto result = endemic::convergence_experiment(cfg, conv_args.out_dir, std::cout);
        return static_cast<int>(result.all_monotone ? ExitCode::ok : ExitCode::diagnostics);
    }
    catch (const endemic::ConfigError& err) {
        return failure(ExitCode::config, "config error", err);
    }
    catch (const endemic::SolverError& err) {
        return failure(ExitCode::solver, "solver error", err);
    }
    catch (const endemic::IoError& err) {
        return failure(ExitCode::io, "i/o error", err);
    }
    catch (const std::exception& err) {
        return failure(ExitCode::solver, "error", err);
    }
}
