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
#ifndef ENDEMIC_MODEL_HPP
#define ENDEMIC_MODEL_HPP

#include "endemic/compartments.hpp"
#include "endemic/kernel.hpp"
#include "endemic/step_control.hpp"
#include "endemic/trajectory.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace endemic
{

/// Contact rate beta(t): a positive smooth function of time. The scenario
/// file accepts either a constant or the named seasonal profile
/// beta(t) = base * (1 + amplitude * sin(2 pi t / period)).
class ContactRate
{
public:
    static ContactRate constant(double value);
    static ContactRate seasonal(double base, double relative_amplitude, double period_days);

    double operator()(double t) const
    {
        if (m_amplitude == 0.0) {
            return m_base;
        }
        return m_base * (1.0 + m_amplitude * std::sin(2.0 * std::numbers::pi * t / m_period));
    }

    bool is_constant() const
    {
        return m_amplitude == 0.0;
    }
    double base() const
    {
        return m_base;
    }
    double amplitude() const
    {
        return m_amplitude;
    }
    double period() const
    {
        return m_period;
    }

private:
    ContactRate(double base, double amplitude, double period);

    double m_base;
    double m_amplitude;
    double m_period;
};

/// Disease death rate from the infection fatality risk: gamma * i_fr / (1 - i_fr).
double mortality_rate(double gamma, double i_fr);

struct Params
{
    ContactRate beta = ContactRate::constant(0.0); ///< 1/(day * individual)
    double gamma     = 0.0;                        ///< recovery rate (1/day)
    double p         = 0.0;                        ///< proportion recovering into temporary immunity
    double i_fr      = 0.0;                        ///< infection fatality risk
    double mu        = 0.0;                        ///< disease death rate (1/day), derived from i_fr

    static Params from_ifr(ContactRate beta, double gamma, double p, double i_fr);

    void validate() const;
};

/// Discrete delays with non-negative weights summing to one (a Dirac
/// discretization of a kernel).
struct LagScheme
{
    std::vector<double> lags;    ///< strictly positive, ascending (days)
    std::vector<double> weights; ///< non-negative, sum 1 within 1e-12

    double min_lag() const
    {
        return lags.front();
    }
    double max_lag() const
    {
        return lags.back();
    }
    void validate() const;
};

struct LagSchemePair
{
    LagScheme tau; ///< latency delays
    LagScheme rho; ///< immunity-waning delays
};

/// Named discretization presets: "d1" (single lag), "d3" (few lags),
/// "d60" (many lags). Throws ConfigError on unknown names.
LagSchemePair lag_scheme_preset(std::string_view name);

/// Builds a lag scheme by sampling a kernel at n midpoints and normalizing
/// the sampled densities; converges to the kernel integral as n grows.
LagScheme lag_scheme_from_kernel(const CompactKernel& k, int n);

struct ScenarioConfig
{
    Params params;
    CompactKernel phi = ebola_phi(); ///< immunity-waning density
    CompactKernel psi = ebola_psi(); ///< latency density

    double c_s = 0.0; ///< susceptible history constant (resolved from n0)
    double c_i = 0.0; ///< infectious history constant
    double n0  = 0.0; ///< initial total population
    bool rp_zero = true; ///< start permanent recoveries at zero rather than the moment formula

    double horizon        = 0.0; ///< days
    double window         = 5.0; ///< method-of-steps window, <= min kernel support lower bound
    double sample_spacing = 1.0; ///< CSV export grid (days)

    StepControl control;
    QuadratureOptions quadrature;

    void validate() const;
};

/// The Table-style reference scenario: constant beta = 0.5/n0, gamma = 0.1,
/// p = 0.9, i_fr = 0.475, triangular kernels, n0 = 1e7, c_i = 10, ten years.
ScenarioConfig ebola_scenario();

/// Scenario preset lookup ("ebola"); throws ConfigError on unknown names.
ScenarioConfig scenario_preset(std::string_view name);

struct InitialState
{
    StateVector y0; ///< state at t = 0
    double c_s;     ///< susceptible history constant
};

/// Builds the t = 0 state so the six compartments sum to n0:
///   I(0) = c_i, D(0) = 0,
///   RT(0) = c_i p gamma mean(phi),
///   RP(0) = 0 if rp_zero else (1 - p) gamma c_i mean(psi),
///   E(0)  = beta(0) c_i c_s mean(psi),
/// and c_s solves the linear closure
///   c_s (1 + beta(0) c_i mean(psi)) = n0 - I(0) - RT(0) - RP(0).
InitialState initial_conditions(const Params& params, const CompactKernel& phi,
                                const CompactKernel& psi, double c_i, double n0, bool rp_zero);

/// State at t = 0 from an already-resolved config (no closure solve).
StateVector initial_state(const ScenarioConfig& cfg);

/// Immunity-return functional g(t) = integral of I(t - r) phi(r) dr.
/// The p*gamma factor is applied in the right-hand side, not here.
double g_of_t(const Trajectory& traj, const CompactKernel& phi, double t,
              const QuadratureOptions& opts = {});

/// Delayed force of infection h(t) = integral of beta(s) I(s) S(s) psi(t - s),
/// evaluated as a convolution in the lag variable.
double h_of_t(const Trajectory& traj, const ContactRate& beta, const CompactKernel& psi, double t,
              const QuadratureOptions& opts = {});

/// Continuous-model right-hand side given the delayed functionals g and h.
/// The six components sum to zero identically.
StateVector rhs_continuous(double t, const StateVector& y, double g, double h,
                           const Params& params);

/// Discrete-lag right-hand side: the kernel integrals are replaced by
/// weighted sums over the supplied delayed lookups
/// infectious_lagged[i] = I(t - rho_i) and force_lagged[j] = (beta I S)(t - tau_j).
StateVector rhs_discrete(double t, const StateVector& y,
                         std::span<const double> infectious_lagged,
                         std::span<const double> force_lagged, const LagScheme& tau,
                         const LagScheme& rho, const Params& params);

} // namespace endemic

#endif // ENDEMIC_MODEL_HPP
