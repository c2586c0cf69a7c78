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
#include "endemic/solver.hpp"

#include <algorithm>
#include <cmath>

namespace endemic
{

void StepControl::validate() const
{
    if (!(rtol > 0.0) || !(atol > 0.0)) {
        throw ConfigError("tolerances must be positive");
    }
    if (!(h_min > 0.0) || !(h_min <= h_init) || !(h_init <= h_max)) {
        throw ConfigError("step sizes must satisfy 0 < h_min <= h_init <= h_max");
    }
    if (max_steps < 1) {
        throw ConfigError("max_steps must be positive");
    }
}

namespace
{

void append_nodes(Trajectory& traj, const std::vector<StepNode>& nodes)
{
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        traj.append_segment({nodes[i].t, nodes[i + 1].t, nodes[i].y, nodes[i + 1].y, nodes[i].f,
                             nodes[i + 1].f});
    }
}

} // namespace

Trajectory solve_method_of_steps(const ScenarioConfig& cfg)
{
    cfg.validate();
    const StateVector y0 = initial_state(cfg);
    Trajectory traj(y0);
    if (cfg.horizon <= 0.0) {
        return traj;
    }

    StateVector y = y0;
    double k      = 0.0;
    while (k < cfg.horizon - 1e-12) {
        const double k_next = std::min(k + cfg.window, cfg.horizon);
        // Delayed functionals read the committed trajectory only; inside
        // [k, k_next] every lookup lands at or before k.
        const auto rhs = [&](double t, const StateVector& state) {
            const double g = g_of_t(traj, cfg.phi, t, cfg.quadrature);
            const double h = h_of_t(traj, cfg.params.beta, cfg.psi, t, cfg.quadrature);
            return rhs_continuous(t, state, g, h, cfg.params);
        };
        const auto nodes = integrate_window(rhs, y, k, k_next, cfg.control);
        append_nodes(traj, nodes);
        traj.mark_breakpoint(k_next);
        y = nodes.back().y;
        k = k_next;
    }
    return traj;
}

Trajectory solve_discrete(const ScenarioConfig& cfg, const LagSchemePair& schemes)
{
    cfg.validate();
    schemes.tau.validate();
    schemes.rho.validate();

    const double min_lag = std::min(schemes.tau.min_lag(), schemes.rho.min_lag());
    if (!(min_lag > 0.0)) {
        throw ConfigError("discrete model needs strictly positive lags");
    }
    const double window = std::min(cfg.window, min_lag);

    std::vector<double> all_lags;
    all_lags.insert(all_lags.end(), schemes.tau.lags.begin(), schemes.tau.lags.end());
    all_lags.insert(all_lags.end(), schemes.rho.lags.begin(), schemes.rho.lags.end());
    std::sort(all_lags.begin(), all_lags.end());
    const std::vector<double> stops = propagate_lag_breakpoints(all_lags, cfg.horizon);

    const StateVector y0 = initial_state(cfg);
    Trajectory traj(y0);
    if (cfg.horizon <= 0.0) {
        return traj;
    }

    std::vector<double> i_lagged(schemes.rho.lags.size());
    std::vector<double> force_lagged(schemes.tau.lags.size());

    StateVector y = y0;
    double k      = 0.0;
    while (k < cfg.horizon - 1e-12) {
        const double k_next = std::min(k + window, cfg.horizon);
        const auto rhs = [&](double t, const StateVector& state) {
            for (std::size_t i = 0; i < schemes.rho.lags.size(); ++i) {
                i_lagged[i] = traj.eval(t - schemes.rho.lags[i], Compartment::I);
            }
            for (std::size_t j = 0; j < schemes.tau.lags.size(); ++j) {
                const double s      = t - schemes.tau.lags[j];
                const StateVector v = traj.eval(s);
                force_lagged[j] =
                    cfg.params.beta(s) * v[idx(Compartment::I)] * v[idx(Compartment::S)];
            }
            return rhs_discrete(t, state, i_lagged, force_lagged, schemes.tau, schemes.rho,
                                cfg.params);
        };

        const auto lo = std::upper_bound(stops.begin(), stops.end(), k + 1e-12);
        const auto hi = std::lower_bound(stops.begin(), stops.end(), k_next - 1e-12);
        const auto nodes = integrate_window(rhs, y, k, k_next, cfg.control,
                                            std::span<const double>(lo, hi));
        append_nodes(traj, nodes);
        traj.mark_breakpoint(k_next);
        y = nodes.back().y;
        k = k_next;
    }
    return traj;
}

std::vector<double> propagate_lag_breakpoints(std::span<const double> lags, double horizon,
                                              int max_generations)
{
    // Each generation smooths the solution by one derivative, so the
    // propagation tree is cut off after a few levels; the count is further
    // capped to keep step clipping from dominating runtime on dense schemes.
    constexpr std::size_t max_points = 200000;

    std::vector<double> unique_lags(lags.begin(), lags.end());
    std::sort(unique_lags.begin(), unique_lags.end());
    unique_lags.erase(std::unique(unique_lags.begin(), unique_lags.end(),
                                  [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                      unique_lags.end());

    std::vector<double> out;
    std::vector<double> frontier{0.0};
    for (int gen = 0; gen < max_generations; ++gen) {
        std::vector<double> next;
        next.reserve(frontier.size() * unique_lags.size());
        for (double base : frontier) {
            for (double lag : unique_lags) {
                const double t = base + lag;
                if (t <= horizon) {
                    next.push_back(t);
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end(),
                               [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                   next.end());
        if (next.empty() || out.size() + next.size() > max_points) {
            break;
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              out.end());
    return out;
}

} // namespace endemic
