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
#include "endemic/diagnostics.hpp"

#include "endemic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace endemic
{

std::vector<double> uniform_grid(double t_end, double dt)
{
    if (!(dt > 0.0) || t_end < 0.0) {
        throw ConfigError("grid needs dt > 0 and t_end >= 0");
    }
    const auto n = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    std::vector<double> grid(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        grid[i] = i * dt;
    }
    return grid;
}

namespace
{

// Ternary search of one compartment on [lo, hi]; the interpolant is smooth
// between breakpoints so a local minimum refines quickly.
double refine_minimum(const Trajectory& traj, Compartment c, double lo, double hi, double& arg)
{
    for (int iter = 0; iter < 60 && hi - lo > 1e-12; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (traj.eval(m1, c) < traj.eval(m2, c)) {
            hi = m2;
        }
        else {
            lo = m1;
        }
    }
    arg = 0.5 * (lo + hi);
    return traj.eval(arg, c);
}

} // namespace

NonNegativityReport check_nonnegativity(const Trajectory& traj, std::span<const double> grid,
                                        double tol_neg)
{
    NonNegativityReport report{};
    report.tol_neg = tol_neg;
    report.pass    = true;

    std::array<std::size_t, num_compartments> argmin_idx{};
    report.minima.fill(std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const StateVector y = traj.eval(grid[i]);
        for (int c = 0; c < num_compartments; ++c) {
            if (y[c] < report.minima[c]) {
                report.minima[c]   = y[c];
                report.argmin_t[c] = grid[i];
                argmin_idx[c]      = i;
            }
        }
    }
    for (int c = 0; c < num_compartments; ++c) {
        const std::size_t i = argmin_idx[c];
        const double lo     = grid[i > 0 ? i - 1 : 0];
        const double hi     = grid[std::min(i + 1, grid.size() - 1)];
        double arg          = report.argmin_t[c];
        const double refined =
            refine_minimum(traj, static_cast<Compartment>(c), lo, hi, arg);
        if (refined < report.minima[c]) {
            report.minima[c]   = refined;
            report.argmin_t[c] = arg;
        }
        report.pass = report.pass && report.minima[c] >= -tol_neg;
    }
    return report;
}

ConservationReport check_conservation(const Trajectory& traj, std::span<const double> grid)
{
    ConservationReport report{};
    if (grid.empty()) {
        throw ConfigError("conservation check needs a non-empty grid");
    }
    report.n0               = traj.eval(grid.front()).sum();
    report.monotonicity_tol = 1e-9 * report.n0;

    double living_prev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const StateVector y = traj.eval(grid[i]);
        const double total  = y.sum();
        const double living = total - y[idx(Compartment::D)];
        report.drift_rel = std::max(report.drift_rel, std::abs(total - report.n0) / report.n0);
        if (i > 0 && living - living_prev > report.monotonicity_tol) {
            ++report.monotonicity_violations;
        }
        living_prev = living;
    }
    return report;
}

double derivative_jump(const Trajectory& traj, Compartment c, double t, double h_fd)
{
    if (!(h_fd > 0.0)) {
        throw ConfigError("derivative jump needs h_fd > 0");
    }
    const auto slope = [&](double sign) {
        // Two secants at offsets 1.5 h and 2.5 h from t, extrapolated back to
        // t; second-order, so the smooth curvature cancels in the difference.
        const double f1 = traj.eval(t + sign * h_fd, c);
        const double f2 = traj.eval(t + sign * 2.0 * h_fd, c);
        const double f3 = traj.eval(t + sign * 3.0 * h_fd, c);
        const double s1 = sign * (f2 - f1) / h_fd;
        const double s2 = sign * (f3 - f2) / h_fd;
        return 2.5 * s1 - 1.5 * s2;
    };
    return slope(+1.0) - slope(-1.0);
}

TrajectoryDistance compare_trajectories(const Trajectory& a, const Trajectory& b,
                                        std::span<const double> grid)
{
    TrajectoryDistance dist{};
    if (grid.empty()) {
        throw ConfigError("trajectory comparison needs a non-empty grid");
    }
    const double n0 = a.eval(grid.front()).sum();
    for (double t : grid) {
        const StateVector diff = (a.eval(t) - b.eval(t)).cwiseAbs();
        for (int c = 0; c < num_compartments; ++c) {
            dist.sup[c] = std::max(dist.sup[c], diff[c]);
        }
    }
    for (int c = 0; c < num_compartments; ++c) {
        dist.sup_rel[c] = dist.sup[c] / std::max(1.0, n0);
    }
    return dist;
}

bool DiagnosticsReport::pass(double drift_tol) const
{
    return non_negativity.pass && conservation.drift_rel <= drift_tol &&
           conservation.monotonicity_violations == 0;
}

namespace
{

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string DiagnosticsReport::to_text() const
{
    std::ostringstream out;
    out << "non-negativity: " << (non_negativity.pass ? "pass" : "FAIL")
        << " (tolerance " << fmt(-non_negativity.tol_neg) << ")\n";
    for (int c = 0; c < num_compartments; ++c) {
        out << "  min " << compartment_names[c] << " = " << fmt(non_negativity.minima[c])
            << " at t = " << fmt(non_negativity.argmin_t[c]) << "\n";
    }
    out << "conservation: total drift " << fmt(conservation.drift_rel) << " relative to n0 = "
        << fmt(conservation.n0) << "\n";
    out << "monotonicity: " << conservation.monotonicity_violations
        << " increase(s) of the living population beyond tolerance\n";
    for (const auto& jump : jump_estimates) {
        out << "derivative jump of " << compartment_names[static_cast<int>(jump.compartment)]
            << " at t = " << fmt(jump.t) << ": " << fmt(jump.value) << "\n";
    }
    if (supnorm_vs_reference) {
        out << "sup distance to reference:\n";
        for (int c = 0; c < num_compartments; ++c) {
            out << "  " << compartment_names[c] << ": " << fmt(supnorm_vs_reference->sup[c])
                << " (relative " << fmt(supnorm_vs_reference->sup_rel[c]) << ")\n";
        }
    }
    return out.str();
}

std::string DiagnosticsReport::to_kv() const
{
    std::ostringstream out;
    for (int c = 0; c < num_compartments; ++c) {
        out << "min_" << compartment_names[c] << "=" << fmt(non_negativity.minima[c]) << "\n";
    }
    out << "nonnegativity_pass=" << (non_negativity.pass ? 1 : 0) << "\n";
    out << "conservation_drift=" << fmt(conservation.drift_rel) << "\n";
    out << "monotonicity_violations=" << conservation.monotonicity_violations << "\n";
    for (const auto& jump : jump_estimates) {
        out << "jump_" << compartment_names[static_cast<int>(jump.compartment)] << "_" << fmt(jump.t)
            << "=" << fmt(jump.value) << "\n";
    }
    if (supnorm_vs_reference) {
        for (int c = 0; c < num_compartments; ++c) {
            out << "supnorm_" << compartment_names[c] << "=" << fmt(supnorm_vs_reference->sup[c])
                << "\n";
        }
    }
    return out.str();
}

DiagnosticsReport run_diagnostics(const Trajectory& traj, const DiagnosticsOptions& opts,
                                  const Trajectory* reference)
{
    DiagnosticsReport report;
    const auto grid = uniform_grid(traj.t_end(), opts.grid_spacing);
    const double n0 = traj.eval(grid.front()).sum();

    report.non_negativity = check_nonnegativity(traj, grid, opts.tol_neg_rel * n0);
    report.conservation   = check_conservation(traj, grid);
    for (double t : opts.jump_times) {
        // The history extends to all negative times, so only the right-hand
        // stencil can run past the stored solution.
        if (t + 3.0 * opts.jump_h_fd <= traj.t_end()) {
            report.jump_estimates.push_back(
                {t, Compartment::I, derivative_jump(traj, Compartment::I, t, opts.jump_h_fd)});
        }
    }
    if (reference != nullptr) {
        const auto common = uniform_grid(std::min(traj.t_end(), reference->t_end()),
                                         opts.grid_spacing);
        report.supnorm_vs_reference = compare_trajectories(traj, *reference, common);
    }
    return report;
}

} // namespace endemic
