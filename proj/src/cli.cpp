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

#include "endemic/csv.hpp"
#include "endemic/errors.hpp"
#include "endemic/solver.hpp"

#include <fstream>
#include <future>

namespace endemic
{

namespace
{

Trajectory solve(const ScenarioConfig& cfg, const ModelChoice& model)
{
    if (model.is_continuous()) {
        return solve_method_of_steps(cfg);
    }
    return solve_discrete(cfg, *model.schemes);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

// Comparison against a reference CSV: evaluate this run's trajectory at the
// reference sample times that fall inside our horizon.
TrajectoryDistance compare_to_csv(const Trajectory& traj, const SampledTrajectory& ref)
{
    TrajectoryDistance dist{};
    if (ref.times.empty()) {
        throw ConfigError("reference CSV has no rows");
    }
    const double n0 = traj.eval(0.0).sum();
    for (std::size_t i = 0; i < ref.times.size(); ++i) {
        const double t = ref.times[i];
        if (t < 0.0 || t > traj.t_end()) {
            continue;
        }
        const StateVector diff = (traj.eval(t) - ref.states[i]).cwiseAbs();
        for (int c = 0; c < num_compartments; ++c) {
            dist.sup[c] = std::max(dist.sup[c], diff[c]);
        }
    }
    for (int c = 0; c < num_compartments; ++c) {
        dist.sup_rel[c] = dist.sup[c] / std::max(1.0, n0);
    }
    return dist;
}

std::string comparison_text(const TrajectoryDistance& dist)
{
    std::string out = "sup distance to reference per compartment\n";
    char buf[96];
    for (int c = 0; c < num_compartments; ++c) {
        std::snprintf(buf, sizeof(buf), "%-3s %.12g (relative %.12g)\n",
                      std::string(compartment_names[c]).c_str(), dist.sup[c], dist.sup_rel[c]);
        out += buf;
    }
    return out;
}

constexpr const char* run_plot_script = R"(#!/usr/bin/env python3
"""Plot the six compartments of one trajectory.csv."""
import csv
import sys
from pathlib import Path

import matplotlib.pyplot as plt

here = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
with open(here / "trajectory.csv") as fh:
    rows = list(csv.DictReader(fh))
compartments = ["S", "E", "I", "RT", "RP", "D"]
t = [float(r["t"]) for r in rows]

fig, axes = plt.subplots(2, 3, figsize=(15, 8), sharex=True)
for ax, comp in zip(axes.flat, compartments):
    ax.plot(t, [float(r[comp]) for r in rows])
    ax.set_title(comp)
    ax.set_xlabel("days")
fig.tight_layout()
out = here / "trajectory.png"
fig.savefig(out, dpi=150)
print(f"wrote {out}")
)";

constexpr const char* plot_script = R"(#!/usr/bin/env python3
"""Plot the trajectories written by the convergence experiment."""
import csv
import sys
from pathlib import Path

import matplotlib.pyplot as plt

here = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
runs = ["continuous", "d1", "d3", "d60"]
styles = {"continuous": "-", "d60": ":", "d3": "-.", "d1": "--"}
compartments = ["S", "E", "I", "RT", "RP", "D"]

data = {}
for run in runs:
    with open(here / f"{run}.csv") as fh:
        rows = list(csv.DictReader(fh))
    data[run] = {k: [float(r[k]) for r in rows] for k in ["t"] + compartments}

fig, axes = plt.subplots(2, 3, figsize=(15, 8), sharex=True)
for ax, comp in zip(axes.flat, compartments):
    for run in runs:
        ax.plot(data[run]["t"], data[run][comp], styles[run], label=run)
    ax.set_title(comp)
    ax.set_xlabel("days")
axes.flat[0].legend()
fig.tight_layout()
out = here / "convergence.png"
fig.savefig(out, dpi=150)
print(f"wrote {out}")
)";

} // namespace

ExitCode run(const RunSpec& spec, std::ostream& log)
{
    std::error_code ec;
    std::filesystem::create_directories(spec.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + spec.out_dir.string() + ": " +
                      ec.message());
    }

    const Trajectory traj = solve(spec.scenario, spec.model);

    const auto grid = uniform_grid(traj.t_end(), spec.scenario.sample_spacing);
    write_csv(spec.out_dir / "trajectory.csv", sample_trajectory(traj, grid));
    write_text(spec.out_dir / "plot_trajectory.py", run_plot_script);
    log << "wrote " << (spec.out_dir / "trajectory.csv").string() << " (" << grid.size()
        << " rows)\n";

    bool diagnostics_ok = true;
    if (spec.diagnostics) {
        DiagnosticsOptions opts;
        opts.jump_times = {0.0, spec.scenario.window};
        const DiagnosticsReport report = run_diagnostics(traj, opts);
        write_text(spec.out_dir / "diagnostics.txt", report.to_text());
        write_text(spec.out_dir / "diagnostics.kv", report.to_kv());
        diagnostics_ok = report.pass();
        log << report.to_text();
    }

    if (spec.compare_csv) {
        const TrajectoryDistance dist = compare_to_csv(traj, read_csv(*spec.compare_csv));
        write_text(spec.out_dir / "comparison.txt", comparison_text(dist));
        log << comparison_text(dist);
    }

    return diagnostics_ok ? ExitCode::ok : ExitCode::diagnostics;
}

ConvergenceResult convergence_experiment(const ScenarioConfig& cfg,
                                         const std::filesystem::path& out_dir, std::ostream& log,
                                         double compare_spacing)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    }

    ConvergenceResult result{};

    // The four solves share no mutable state; run them concurrently and
    // assemble in fixed preset order.
    auto reference_future =
        std::async(std::launch::async, [&cfg] { return solve_method_of_steps(cfg); });
    std::array<std::future<Trajectory>, 3> discrete_futures;
    for (std::size_t i = 0; i < result.presets.size(); ++i) {
        discrete_futures[i] = std::async(std::launch::async, [&cfg, &result, i] {
            return solve_discrete(cfg, lag_scheme_preset(result.presets[i]));
        });
    }

    const Trajectory reference = reference_future.get();
    const auto grid            = uniform_grid(reference.t_end(), compare_spacing);
    write_csv(out_dir / "continuous.csv", sample_trajectory(reference, grid));

    for (std::size_t i = 0; i < result.presets.size(); ++i) {
        const Trajectory traj = discrete_futures[i].get();
        result.gaps[i]        = compare_trajectories(traj, reference, grid);
        write_csv(out_dir / (result.presets[i] + ".csv"), sample_trajectory(traj, grid));
    }

    std::string table = "preset";
    for (int c = 0; c < num_compartments; ++c) {
        table += ",sup_";
        table += compartment_names[c];
    }
    table += '\n';
    char buf[32];
    for (std::size_t i = 0; i < result.presets.size(); ++i) {
        table += result.presets[i];
        for (int c = 0; c < num_compartments; ++c) {
            std::snprintf(buf, sizeof(buf), ",%.12g", result.gaps[i].sup[c]);
            table += buf;
        }
        table += '\n';
    }
    write_text(out_dir / "convergence.csv", table);
    write_text(out_dir / "plot_convergence.py", plot_script);
    log << table;

    result.all_monotone = true;
    for (int c = 0; c < num_compartments; ++c) {
        result.monotone[c] = result.gaps[1].sup[c] < result.gaps[0].sup[c] &&
                             result.gaps[2].sup[c] < result.gaps[1].sup[c];
        result.all_monotone = result.all_monotone && result.monotone[c];
        if (!result.monotone[c]) {
            log << "gap ordering violated for " << compartment_names[c] << ": d1 "
                << result.gaps[0].sup[c] << ", d3 " << result.gaps[1].sup[c] << ", d60 "
                << result.gaps[2].sup[c] << "\n";
        }
    }
    return result;
}

} // namespace endemic
