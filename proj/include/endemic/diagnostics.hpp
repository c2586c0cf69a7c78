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
#ifndef ENDEMIC_DIAGNOSTICS_HPP
#define ENDEMIC_DIAGNOSTICS_HPP

#include "endemic/compartments.hpp"
#include "endemic/trajectory.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace endemic
{

/// Uniform grid 0, dt, 2 dt, ... up to and including t_end when it is a
/// multiple of dt.
std::vector<double> uniform_grid(double t_end, double dt);

struct NonNegativityReport
{
    std::array<double, num_compartments> minima;   ///< refined around the grid argmin
    std::array<double, num_compartments> argmin_t;
    double tol_neg;
    bool pass;
};

/// Per-compartment minima over the grid, refined by local search around the
/// grid argmin. Passes iff every sampled value is at least -tol_neg.
NonNegativityReport check_nonnegativity(const Trajectory& traj, std::span<const double> grid,
                                        double tol_neg);

struct ConservationReport
{
    double n0;                  ///< total population at the first grid point
    double drift_rel;           ///< max |sum(state) - n0| / n0 over the grid
    int monotonicity_violations; ///< grid intervals where the living total grows beyond tolerance
    double monotonicity_tol;
};

/// Drift of the six-compartment total from its initial value, and a count of
/// grid intervals where the living population S+E+I+RT+RP increases by more
/// than 1e-9 * n0 (it must be non-increasing, its derivative is -mu I).
ConservationReport check_conservation(const Trajectory& traj, std::span<const double> grid);

/// One-sided slope difference around t: second-order slope estimates built
/// from points strictly right of t minus the mirrored estimate from points
/// strictly left of t. Needs t +/- 3 h_fd inside the evaluable domain.
/// At a C^1 point the result is O(h_fd^2); across a derivative jump it
/// converges to the jump itself.
double derivative_jump(const Trajectory& traj, Compartment c, double t, double h_fd);

struct TrajectoryDistance
{
    std::array<double, num_compartments> sup;     ///< max |a - b| over the grid
    std::array<double, num_compartments> sup_rel; ///< sup / max(1, n0 of a)
};

TrajectoryDistance compare_trajectories(const Trajectory& a, const Trajectory& b,
                                        std::span<const double> grid);

struct JumpEstimate
{
    double t;
    Compartment compartment;
    double value;
};

/// Structural observables of one computed trajectory, all pure functions of
/// the trajectory and the grids.
struct DiagnosticsReport
{
    NonNegativityReport non_negativity;
    ConservationReport conservation;
    std::vector<JumpEstimate> jump_estimates;
    std::optional<TrajectoryDistance> supnorm_vs_reference;

    bool pass(double drift_tol = 1e-6) const;

    std::string to_text() const;
    /// Machine-readable `metric=value` lines, one per line, stable keys.
    std::string to_kv() const;
};

struct DiagnosticsOptions
{
    double grid_spacing = 0.1;
    double tol_neg_rel  = 1e-9; ///< times n0
    double jump_h_fd    = 1e-3;
    std::vector<double> jump_times; ///< where to estimate I-derivative jumps
};

DiagnosticsReport run_diagnostics(const Trajectory& traj, const DiagnosticsOptions& opts,
                                  const Trajectory* reference = nullptr);

} // namespace endemic

#endif // ENDEMIC_DIAGNOSTICS_HPP
