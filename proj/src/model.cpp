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
#include "endemic/model.hpp"

#include "endemic/errors.hpp"

#include <algorithm>
#include <numeric>

namespace endemic
{

ContactRate::ContactRate(double base, double amplitude, double period)
    : m_base(base)
    , m_amplitude(amplitude)
    , m_period(period)
{
}

ContactRate ContactRate::constant(double value)
{
    if (!(value >= 0.0)) {
        throw ConfigError("contact rate must be non-negative");
    }
    return ContactRate(value, 0.0, 1.0);
}

ContactRate ContactRate::seasonal(double base, double relative_amplitude, double period_days)
{
    if (!(base >= 0.0) || std::abs(relative_amplitude) > 1.0 || !(period_days > 0.0)) {
        throw ConfigError("seasonal contact rate needs base >= 0, |amplitude| <= 1, period > 0");
    }
    return ContactRate(base, relative_amplitude, period_days);
}

double mortality_rate(double gamma, double i_fr)
{
    if (!(i_fr >= 0.0) || !(i_fr < 1.0)) {
        throw ConfigError("infection fatality risk must lie in [0, 1)");
    }
    if (!(gamma >= 0.0)) {
        throw ConfigError("recovery rate must be non-negative");
    }
    return gamma * i_fr / (1.0 - i_fr);
}

Params Params::from_ifr(ContactRate beta, double gamma, double p, double i_fr)
{
    Params params;
    params.beta  = beta;
    params.gamma = gamma;
    params.p     = p;
    params.i_fr  = i_fr;
    params.mu    = mortality_rate(gamma, i_fr);
    params.validate();
    return params;
}

void Params::validate() const
{
    if (!(gamma >= 0.0) || !(mu >= 0.0)) {
        throw ConfigError("rates gamma and mu must be non-negative");
    }
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw ConfigError("temporary-immunity proportion p must lie in [0, 1]");
    }
    if (!(i_fr >= 0.0) || !(i_fr < 1.0)) {
        throw ConfigError("infection fatality risk must lie in [0, 1)");
    }
}

void LagScheme::validate() const
{
    if (lags.empty() || lags.size() != weights.size()) {
        throw ConfigError("lag scheme needs matching non-empty lag and weight lists");
    }
    if (!(lags.front() > 0.0)) {
        throw ConfigError("lags must be strictly positive");
    }
    for (std::size_t i = 0; i + 1 < lags.size(); ++i) {
        if (!(lags[i] <= lags[i + 1])) {
            throw ConfigError("lags must be ascending");
        }
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw ConfigError("lag weights must be non-negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ConfigError("lag weights must sum to 1, got " + std::to_string(sum));
    }
}

LagSchemePair lag_scheme_preset(std::string_view name)
{
    LagSchemePair pair;
    if (name == "d1") {
        pair.tau = {{10.0}, {1.0}};
        pair.rho = {{225.0}, {1.0}};
    }
    else if (name == "d3") {
        pair.tau = {{5.0, 10.0, 15.0}, {0.25, 0.5, 0.25}};
        pair.rho = {{200.0, 210.0, 220.0}, {0.25, 0.5, 0.25}};
    }
    else if (name == "d60") {
        LagScheme tau;
        LagScheme rho;
        for (int j = 0; j < 60; ++j) {
            tau.lags.push_back(5.0 + j * 10.0 / 59.0);
            rho.lags.push_back(200.0 + j * 50.0 / 59.0);
            const double w = std::min(j + 1, 60 - j) / 930.0;
            tau.weights.push_back(w);
            rho.weights.push_back(w);
        }
        pair.tau = std::move(tau);
        pair.rho = std::move(rho);
    }
    else {
        throw ConfigError("unknown lag scheme preset '" + std::string(name) + "'");
    }
    pair.tau.validate();
    pair.rho.validate();
    return pair;
}

LagScheme lag_scheme_from_kernel(const CompactKernel& k, int n)
{
    if (n < 1) {
        throw ConfigError("lag scheme needs at least one point");
    }
    LagScheme scheme;
    const double a = k.support_min();
    const double h = (k.support_max() - a) / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = a + (j + 0.5) * h;
        const double w = k(x) * h;
        if (w > 0.0) {
            scheme.lags.push_back(x);
            scheme.weights.push_back(w);
        }
        sum += w;
    }
    for (double& w : scheme.weights) {
        w /= sum;
    }
    scheme.validate();
    return scheme;
}

void ScenarioConfig::validate() const
{
    params.validate();
    if (!phi.is_normalized() || !psi.is_normalized()) {
        throw ConfigError("delay kernels must integrate to 1");
    }
    if (!(c_s > 0.0) || !(c_i > 0.0)) {
        throw ConfigError("history constants c_s and c_i must be positive");
    }
    if (!(n0 > 0.0)) {
        throw ConfigError("initial total population must be positive");
    }
    if (!(horizon >= 0.0)) {
        throw ConfigError("horizon must be non-negative");
    }
    const double max_window = std::min(phi.support_min(), psi.support_min());
    if (!(window > 0.0) || window > max_window + 1e-12) {
        throw ConfigError("window must lie in (0, " + std::to_string(max_window) +
                          "], the smallest kernel support lower bound");
    }
    if (!(sample_spacing > 0.0)) {
        throw ConfigError("sample spacing must be positive");
    }
    control.validate();
}

ScenarioConfig ebola_scenario()
{
    ScenarioConfig cfg;
    cfg.n0      = 1e7;
    cfg.c_i     = 10.0;
    cfg.rp_zero = true;
    cfg.params  = Params::from_ifr(ContactRate::constant(0.5 / cfg.n0), 0.1, 0.9, 0.475);
    cfg.phi     = ebola_phi();
    cfg.psi     = ebola_psi();
    cfg.horizon = 3650.0;
    cfg.window  = 5.0;

    const InitialState init = initial_conditions(cfg.params, cfg.phi, cfg.psi, cfg.c_i, cfg.n0,
                                                 cfg.rp_zero);
    cfg.c_s = init.c_s;
    cfg.validate();
    return cfg;
}

ScenarioConfig scenario_preset(std::string_view name)
{
    if (name == "ebola") {
        return ebola_scenario();
    }
    throw ConfigError("unknown scenario preset '" + std::string(name) + "'");
}

InitialState initial_conditions(const Params& params, const CompactKernel& phi,
                                const CompactKernel& psi, double c_i, double n0, bool rp_zero)
{
    if (!(n0 > 0.0) || !(c_i > 0.0)) {
        throw ConfigError("initial population and infectious history must be positive");
    }
    const double mean_phi = phi.mean();
    const double mean_psi = psi.mean();
    const double beta0    = params.beta(0.0);

    const double i0  = c_i;
    const double rt0 = c_i * params.p * params.gamma * mean_phi;
    const double rp0 = rp_zero ? 0.0 : (1.0 - params.p) * params.gamma * c_i * mean_psi;

    // E(0) = beta0 c_i mean_psi * c_s couples the closure linearly in c_s.
    const double e_per_cs = beta0 * c_i * mean_psi;
    const double c_s      = (n0 - i0 - rt0 - rp0) / (1.0 + e_per_cs);
    if (!(c_s > 0.0)) {
        throw ConfigError("initial conditions inconsistent: susceptible history would be " +
                          std::to_string(c_s));
    }

    StateVector y0;
    y0[idx(Compartment::S)]  = c_s;
    y0[idx(Compartment::E)]  = e_per_cs * c_s;
    y0[idx(Compartment::I)]  = i0;
    y0[idx(Compartment::RT)] = rt0;
    y0[idx(Compartment::RP)] = rp0;
    y0[idx(Compartment::D)]  = 0.0;
    return {y0, c_s};
}

StateVector initial_state(const ScenarioConfig& cfg)
{
    const double mean_phi = cfg.phi.mean();
    const double mean_psi = cfg.psi.mean();
    StateVector y0;
    y0[idx(Compartment::S)]  = cfg.c_s;
    y0[idx(Compartment::E)]  = cfg.params.beta(0.0) * cfg.c_i * cfg.c_s * mean_psi;
    y0[idx(Compartment::I)]  = cfg.c_i;
    y0[idx(Compartment::RT)] = cfg.c_i * cfg.params.p * cfg.params.gamma * mean_phi;
    y0[idx(Compartment::RP)] =
        cfg.rp_zero ? 0.0 : (1.0 - cfg.params.p) * cfg.params.gamma * cfg.c_i * mean_psi;
    y0[idx(Compartment::D)] = 0.0;
    return y0;
}

double g_of_t(const Trajectory& traj, const CompactKernel& phi, double t,
              const QuadratureOptions& opts)
{
    return convolve([&traj](double s) { return traj.eval(s, Compartment::I); }, phi, t,
                    traj.breakpoints(), opts);
}

double h_of_t(const Trajectory& traj, const ContactRate& beta, const CompactKernel& psi, double t,
              const QuadratureOptions& opts)
{
    return convolve(
        [&traj, &beta](double s) {
            const StateVector y = traj.eval(s);
            return beta(s) * y[idx(Compartment::I)] * y[idx(Compartment::S)];
        },
        psi, t, traj.breakpoints(), opts);
}

StateVector rhs_continuous(double t, const StateVector& y, double g, double h,
                           const Params& params)
{
    const double s     = y[idx(Compartment::S)];
    const double i     = y[idx(Compartment::I)];
    const double force = params.beta(t) * i * s;
    const double pg    = params.p * params.gamma;

    StateVector dy;
    dy[idx(Compartment::S)]  = -force + pg * g;
    dy[idx(Compartment::E)]  = force - h;
    dy[idx(Compartment::I)]  = h - (params.gamma + params.mu) * i;
    dy[idx(Compartment::RT)] = pg * i - pg * g;
    dy[idx(Compartment::RP)] = (1.0 - params.p) * params.gamma * i;
    dy[idx(Compartment::D)]  = params.mu * i;
    return dy;
}

StateVector rhs_discrete(double t, const StateVector& y,
                         std::span<const double> infectious_lagged,
                         std::span<const double> force_lagged, const LagScheme& tau,
                         const LagScheme& rho, const Params& params)
{
    const double g = std::inner_product(rho.weights.begin(), rho.weights.end(),
                                        infectious_lagged.begin(), 0.0);
    const double h = std::inner_product(tau.weights.begin(), tau.weights.end(),
                                        force_lagged.begin(), 0.0);
    return rhs_continuous(t, y, g, h, params);
}

} // namespace endemic
