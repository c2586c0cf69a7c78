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

#include "endemic/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace endemic;

namespace
{

// Closed form for the infectious compartment while all delayed lookups still
// hit the constant history: I' = beta c_i c_s - (gamma + mu) I.
struct FirstWindowOracle
{
    double c_i;
    double lambda;
    double plateau;

    explicit FirstWindowOracle(const ScenarioConfig& cfg)
        : c_i(cfg.c_i)
        , lambda(cfg.params.gamma + cfg.params.mu)
        , plateau(cfg.params.beta(0.0) * cfg.c_i * cfg.c_s / lambda)
    {
    }

    double operator()(double t) const
    {
        return (c_i - plateau) * std::exp(-lambda * t) + plateau;
    }
};

} // namespace

TEST_CASE("exponential decay smoke test")
{
    StepControl ctl;
    ctl.rtol = 1e-10;
    ctl.atol = 1e-12;

    const auto rhs = [](double, const StateVector& y) { return StateVector(-y); };
    StateVector y0 = StateVector::Constant(1.0);

    const auto nodes = integrate_window(rhs, y0, 0.0, 1.0, ctl);
    CHECK(nodes.back().t == 1.0);
    for (int c = 0; c < num_compartments; ++c) {
        CHECK(nodes.back().y[c] == doctest::Approx(std::exp(-1.0)).epsilon(10.0 * ctl.rtol));
    }
}

TEST_CASE("oscillatory forcing integrates to the known closed form")
{
    StepControl ctl;
    ctl.rtol = 1e-10;
    ctl.atol = 1e-12;

    // y' = cos(t) y  =>  y = exp(sin t)
    const auto rhs = [](double t, const StateVector& y) { return StateVector(std::cos(t) * y); };
    const auto nodes = integrate_window(rhs, StateVector::Constant(1.0), 0.0, 12.0, ctl);
    for (const auto& node : nodes) {
        CHECK(node.y[0] == doctest::Approx(std::exp(std::sin(node.t))).epsilon(1e-8));
    }
    CHECK(nodes.size() > 10); // genuinely adaptive, not one giant step
}

TEST_CASE("zero right-hand side keeps the state constant")
{
    StepControl ctl;
    const auto rhs  = [](double, const StateVector&) { return StateVector(StateVector::Zero()); };
    StateVector y0  = StateVector::Constant(3.25);
    const auto nodes = integrate_window(rhs, y0, 0.0, 10.0, ctl);
    for (const auto& node : nodes) {
        CHECK((node.y - y0).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("step budget and reversed intervals raise solver errors")
{
    StepControl ctl;
    ctl.max_steps  = 3;
    const auto rhs = [](double t, const StateVector& y) { return StateVector(std::cos(t) * y); };
    StateVector y0 = StateVector::Constant(1.0);
    CHECK_THROWS_AS((void)integrate_window(rhs, y0, 0.0, 50.0, ctl), SolverError);
    CHECK_THROWS_AS((void)integrate_window(rhs, y0, 1.0, 0.0, StepControl{}), SolverError);
}

TEST_CASE("integration lands exactly on interior stop points")
{
    StepControl ctl;
    const auto rhs = [](double t, const StateVector&) {
        // derivative kink at t = 2.341, invisible unless the step lands there
        return StateVector(StateVector::Constant(t < 2.341 ? 1.0 : -1.0));
    };
    const double stops[] = {2.341};
    const auto nodes = integrate_window(rhs, StateVector::Zero(), 0.0, 5.0, ctl, stops);
    bool hit = false;
    for (const auto& node : nodes) {
        hit = hit || node.t == 2.341;
    }
    CHECK(hit);
}

TEST_CASE("first window of the reference scenario matches the scalar closed form")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 5.0;
    cfg.control.rtol   = 1e-10;
    cfg.control.atol   = 1e-10;
    cfg.control.h_max  = 0.1;

    const Trajectory traj = solve_method_of_steps(cfg);
    const FirstWindowOracle oracle(cfg);

    CHECK(traj.eval(2.5, Compartment::I) == doctest::Approx(oracle(2.5)).epsilon(1e-8));
    for (double t = 0.1; t <= 5.0; t += 0.1) {
        CHECK(traj.eval(t, Compartment::I) == doctest::Approx(oracle(t)).epsilon(1e-8));
    }
    CHECK(traj.eval(0.0, Compartment::I) == 10.0);
    CHECK(traj.eval(-37.0, Compartment::I) == 10.0); // constant pre-zero history
}

TEST_CASE("zero horizon yields only the initial state")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 0.0;
    const Trajectory traj = solve_method_of_steps(cfg);
    CHECK(traj.t_end() == 0.0);
    CHECK(traj.eval(0.0, Compartment::I) == cfg.c_i);
}

TEST_CASE("a single window is plain ODE integration")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 5.0;

    const Trajectory traj = solve_method_of_steps(cfg);

    // delayed functionals over [0, 5] are constants of the history
    const double g = cfg.c_i;
    const double h = cfg.params.beta(0.0) * cfg.c_i * cfg.c_s;
    const auto rhs = [&](double t, const StateVector& y) {
        return rhs_continuous(t, y, g, h, cfg.params);
    };
    const auto nodes = integrate_window(rhs, initial_state(cfg), 0.0, 5.0, cfg.control);

    CHECK((traj.eval(5.0) - nodes.back().y).cwiseAbs().maxCoeff() <= 1e-9 * cfg.n0);
}

TEST_CASE("the solution does not depend on the window length")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 20.0;
    const Trajectory five = solve_method_of_steps(cfg);

    cfg.window = 2.5;
    const Trajectory half = solve_method_of_steps(cfg);

    for (double t = 0.0; t <= 20.0; t += 0.25) {
        CHECK((five.eval(t) - half.eval(t)).cwiseAbs().maxCoeff() <= 1e-7 * cfg.n0);
    }
}

TEST_CASE("window boundaries stay continuous over many windows")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 40.0;
    const Trajectory traj = solve_method_of_steps(cfg);
    for (double k = 5.0; k < 40.0; k += 5.0) {
        const StateVector left  = traj.eval(k - 1e-12);
        const StateVector right = traj.eval(k + 1e-12);
        CHECK((left - right).cwiseAbs().maxCoeff() <= 1e-9 * cfg.n0);
    }
}

TEST_CASE("discrete single-lag run follows the same closed form for ten days")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 10.0;
    cfg.control.rtol   = 1e-10;
    cfg.control.atol   = 1e-10;
    cfg.control.h_max  = 0.1;

    const Trajectory traj = solve_discrete(cfg, lag_scheme_preset("d1"));
    const FirstWindowOracle oracle(cfg);
    // With tau = 10, the force lookup hits the constant history until t = 10,
    // so the scalar closed form extends across both windows.
    for (double t = 0.5; t <= 10.0; t += 0.5) {
        CHECK(traj.eval(t, Compartment::I) == doctest::Approx(oracle(t)).epsilon(1e-8));
    }
}

TEST_CASE("duplicating a lag with split weights changes nothing")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 30.0;

    LagSchemePair single = lag_scheme_preset("d1");
    LagSchemePair split;
    split.tau = LagScheme{{10.0, 10.0}, {0.5, 0.5}};
    split.rho = LagScheme{{225.0, 225.0}, {0.5, 0.5}};

    const Trajectory a = solve_discrete(cfg, single);
    const Trajectory b = solve_discrete(cfg, split);
    for (double t = 0.0; t <= 30.0; t += 0.5) {
        CHECK((a.eval(t) - b.eval(t)).cwiseAbs().maxCoeff() <= 1e-10 * cfg.n0);
    }
}

TEST_CASE("zero-horizon discrete solve returns only the initial state")
{
    ScenarioConfig cfg = ebola_scenario();
    cfg.horizon        = 0.0;
    const Trajectory traj = solve_discrete(cfg, lag_scheme_preset("d60"));
    CHECK(traj.t_end() == 0.0);
    CHECK(traj.eval(0.0, Compartment::I) == cfg.c_i);
}

TEST_CASE("lag breakpoints propagate as sums of lags")
{
    const double lags[] = {10.0, 225.0};
    const auto stops    = propagate_lag_breakpoints(lags, 500.0, 3);

    const auto contains = [&stops](double t) {
        for (double s : stops) {
            if (std::abs(s - t) < 1e-9) {
                return true;
            }
        }
        return false;
    };
    CHECK(contains(10.0));
    CHECK(contains(225.0));
    CHECK(contains(20.0));
    CHECK(contains(235.0));
    CHECK(contains(450.0));
    CHECK(contains(30.0));
    CHECK(!contains(0.0));
    for (double s : stops) {
        CHECK(s <= 500.0);
    }
}

TEST_CASE("solver tolerances are validated")
{
    StepControl ctl;
    ctl.rtol = -1.0;
    CHECK_THROWS_AS(ctl.validate(), ConfigError);

    ctl      = StepControl{};
    ctl.h_min = 1.0;
    ctl.h_init = 0.5;
    CHECK_THROWS_AS(ctl.validate(), ConfigError);
}
