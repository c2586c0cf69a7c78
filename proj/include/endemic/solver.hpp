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
#ifndef ENDEMIC_SOLVER_HPP
#define ENDEMIC_SOLVER_HPP

#include "endemic/compartments.hpp"
#include "endemic/errors.hpp"
#include "endemic/model.hpp"
#include "endemic/step_control.hpp"
#include "endemic/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace endemic
{

/// One accepted node of an integration: time, state and state derivative.
/// Consecutive nodes define the cubic Hermite dense output.
struct StepNode
{
    double t;
    StateVector y;
    StateVector f;
};

namespace detail
{

// Dormand-Prince 5(4) tableau.
struct Dopri5
{
    static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;

    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                            a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                            a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;

    // 5th-order weights (also the a7* row; the pair is FSAL).
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;

    // b - bhat, the embedded error weights.
    static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                            e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
};

inline double error_norm(const StateVector& err, const StateVector& y0, const StateVector& y1,
                         double atol, double rtol)
{
    double sum = 0.0;
    for (int i = 0; i < num_compartments; ++i) {
        const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double r     = err[i] / scale;
        sum += r * r;
    }
    return std::sqrt(sum / num_compartments);
}

} // namespace detail

/// Integrates y' = rhs(t, y) from t0 to exactly t1 with the Dormand-Prince
/// 5(4) embedded pair and PI step-size control. Returns all accepted nodes
/// including the initial one; consecutive nodes carry the endpoint
/// derivatives needed for Hermite dense output.
///
/// `stop_points` (ascending, inside (t0, t1)) are times the integration must
/// hit exactly: steps are clipped so no step crosses one. The delayed terms
/// inside `rhs` must only read history at or before the current window start.
///
/// Throws SolverError on step underflow below h_min or when max_steps is
/// exceeded.
template <typename Rhs>
std::vector<StepNode> integrate_window(Rhs&& rhs, const StateVector& y0, double t0, double t1,
                                       const StepControl& ctl,
                                       std::span<const double> stop_points = {})
{
    using T = detail::Dopri5;
    ctl.validate();
    if (!(t1 >= t0)) {
        throw SolverError("integration interval is reversed");
    }

    std::vector<StepNode> nodes;
    nodes.push_back({t0, y0, rhs(t0, y0)});
    if (t1 == t0) {
        return nodes;
    }

    std::size_t next_stop = 0;
    while (next_stop < stop_points.size() && stop_points[next_stop] <= t0 + 1e-12) {
        ++next_stop;
    }

    double t = t0;
    StateVector y = y0;
    StateVector k1 = nodes.front().f;
    double h       = std::min({ctl.h_init, ctl.h_max, t1 - t0});
    double err_old = 1e-4;
    long steps     = 0;

    const double tiny = 1e-12 * std::max(1.0, std::abs(t1));
    while (t < t1 - tiny) {
        if (++steps > ctl.max_steps) {
            throw SolverError("step budget exceeded at t = " + std::to_string(t));
        }

        double limit = t1;
        if (next_stop < stop_points.size() && stop_points[next_stop] < limit) {
            limit = stop_points[next_stop];
        }
        bool hit_limit = false;
        double h_use   = h;
        if (t + h_use >= limit - tiny) {
            h_use     = limit - t;
            hit_limit = true;
        }

        const StateVector k2 = rhs(t + T::c2 * h_use, y + h_use * (T::a21 * k1));
        const StateVector k3 = rhs(t + T::c3 * h_use, y + h_use * (T::a31 * k1 + T::a32 * k2));
        const StateVector k4 =
            rhs(t + T::c4 * h_use, y + h_use * (T::a41 * k1 + T::a42 * k2 + T::a43 * k3));
        const StateVector k5 = rhs(t + T::c5 * h_use, y + h_use * (T::a51 * k1 + T::a52 * k2 +
                                                                   T::a53 * k3 + T::a54 * k4));
        const StateVector k6 =
            rhs(t + h_use, y + h_use * (T::a61 * k1 + T::a62 * k2 + T::a63 * k3 + T::a64 * k4 +
                                        T::a65 * k5));
        const StateVector y_new =
            y + h_use * (T::b1 * k1 + T::b3 * k3 + T::b4 * k4 + T::b5 * k5 + T::b6 * k6);
        const double t_new   = hit_limit ? limit : t + h_use;
        const StateVector k7 = rhs(t_new, y_new);

        const StateVector err_vec = h_use * (T::e1 * k1 + T::e3 * k3 + T::e4 * k4 + T::e5 * k5 +
                                             T::e6 * k6 + T::e7 * k7);
        const double err = detail::error_norm(err_vec, y, y_new, ctl.atol, ctl.rtol);

        if (std::isfinite(err) && err <= 1.0) {
            t  = t_new;
            y  = y_new;
            k1 = k7;
            nodes.push_back({t, y, k1});
            if (hit_limit && next_stop < stop_points.size() &&
                std::abs(stop_points[next_stop] - t) <= tiny) {
                ++next_stop;
            }
            double grow = (err <= 1e-30)
                              ? 5.0
                              : 0.9 * std::pow(err, -0.17) * std::pow(err_old, 0.04);
            grow    = std::clamp(grow, 0.2, 5.0);
            h       = std::min(h_use * grow, ctl.h_max);
            err_old = std::max(err, 1e-4);
        }
        else {
            const double shrink = std::isfinite(err)
                                      ? std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9)
                                      : 0.1;
            h = h_use * shrink;
        }
        if (h < ctl.h_min) {
            throw SolverError("step size underflow at t = " + std::to_string(t));
        }
    }
    nodes.back().t = t1; // clipped landing, remove residual roundoff
    return nodes;
}

/// Integrates the continuous-kernel model by the method of steps: on each
/// window [k, k + window] the delayed functionals g and h read only the
/// already-committed trajectory (every lookup lands at or before k because the
/// window never exceeds the smallest kernel support lower bound), which turns
/// the window into an ordinary ODE problem.
Trajectory solve_method_of_steps(const ScenarioConfig& cfg);

/// Integrates the discrete (N_tau, N_rho) lag model with the same windowing
/// strategy (window <= the smallest lag) and lag-aware stepping: derivative
/// discontinuities propagate from t = 0 along sums of lags, and accepted
/// steps never cross such a point.
Trajectory solve_discrete(const ScenarioConfig& cfg, const LagSchemePair& schemes);

/// Times in (0, horizon] reachable from t = 0 by adding at most
/// max_generations lags; each propagation smooths the solution by one
/// derivative, so a small generation count suffices for a fifth-order pair.
/// Sorted and deduplicated.
std::vector<double> propagate_lag_breakpoints(std::span<const double> lags, double horizon,
                                              int max_generations = 3);

} // namespace endemic

#endif // ENDEMIC_SOLVER_HPP
