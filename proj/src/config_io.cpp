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

#include <json.hpp>

#include <fstream>

namespace endemic
{

namespace
{

using nlohmann::json;

json load_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    try {
        return json::parse(in, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
    }
    catch (const json::parse_error& err) {
        throw ConfigError(path.string() + ": " + err.what());
    }
}

CompactKernel kernel_from_json(const json& j)
{
    if (j.is_string()) {
        return kernel_preset(j.get<std::string>());
    }
    if (!j.is_array()) {
        throw ConfigError("kernel must be a preset name or a list of [abscissa, density] pairs");
    }
    std::vector<CompactKernel::Knot> knots;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ConfigError("kernel knots must be [abscissa, density] pairs");
        }
        knots.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return CompactKernel(std::move(knots));
}

ContactRate contact_rate_from_json(const json& j, double n0)
{
    if (j.is_number()) {
        return ContactRate::constant(j.get<double>());
    }
    if (j.is_object() && j.contains("seasonal")) {
        const auto& s = j.at("seasonal");
        return ContactRate::seasonal(s.at("base").get<double>(),
                                     s.at("amplitude").get<double>(),
                                     s.at("period").get<double>());
    }
    if (j.is_object() && j.contains("per_capita")) {
        // contact rate given as a dimensionless rate divided by the population
        return ContactRate::constant(j.at("per_capita").get<double>() / n0);
    }
    throw ConfigError("beta must be a number, {\"per_capita\": x} or {\"seasonal\": {...}}");
}

LagScheme lag_scheme_from_json(const json& j)
{
    LagScheme scheme;
    scheme.lags    = j.at("lags").get<std::vector<double>>();
    scheme.weights = j.at("weights").get<std::vector<double>>();
    scheme.validate();
    return scheme;
}

template <typename T>
void maybe(const json& j, const char* key, T& target)
{
    if (j.contains(key)) {
        target = j.at(key).get<T>();
    }
}

ScenarioConfig scenario_from_json(const json& j)
{
    ScenarioConfig cfg = j.contains("preset") ? scenario_preset(j.at("preset").get<std::string>())
                                              : ebola_scenario();

    if (j.contains("history")) {
        const auto& h = j.at("history");
        maybe(h, "c_i", cfg.c_i);
        maybe(h, "n0", cfg.n0);
        maybe(h, "rp_zero", cfg.rp_zero);
    }
    if (j.contains("kernels")) {
        const auto& k = j.at("kernels");
        if (k.contains("phi")) {
            cfg.phi = kernel_from_json(k.at("phi"));
        }
        if (k.contains("psi")) {
            cfg.psi = kernel_from_json(k.at("psi"));
        }
    }
    if (j.contains("params")) {
        const auto& p = j.at("params");
        double gamma  = cfg.params.gamma;
        double prop   = cfg.params.p;
        double i_fr   = cfg.params.i_fr;
        maybe(p, "gamma", gamma);
        maybe(p, "p", prop);
        maybe(p, "i_fr", i_fr);
        ContactRate beta = p.contains("beta") ? contact_rate_from_json(p.at("beta"), cfg.n0)
                                              : cfg.params.beta;
        cfg.params = Params::from_ifr(beta, gamma, prop, i_fr);
    }
    maybe(j, "horizon", cfg.horizon);
    maybe(j, "window", cfg.window);
    maybe(j, "sample_spacing", cfg.sample_spacing);
    if (j.contains("control")) {
        const auto& c = j.at("control");
        maybe(c, "rtol", cfg.control.rtol);
        maybe(c, "atol", cfg.control.atol);
        maybe(c, "h_init", cfg.control.h_init);
        maybe(c, "h_min", cfg.control.h_min);
        maybe(c, "h_max", cfg.control.h_max);
        maybe(c, "max_steps", cfg.control.max_steps);
    }
    if (j.contains("quadrature")) {
        maybe(j.at("quadrature"), "abs_tol", cfg.quadrature.abs_tol);
    }

    // Any history or parameter change invalidates the preset's susceptible
    // closure; re-solve it.
    cfg.c_s = initial_conditions(cfg.params, cfg.phi, cfg.psi, cfg.c_i, cfg.n0, cfg.rp_zero).c_s;
    cfg.validate();
    return cfg;
}

} // namespace

ModelChoice ModelChoice::parse(std::string_view name)
{
    ModelChoice choice;
    choice.name = std::string(name);
    if (name == "continuous") {
        return choice;
    }
    choice.schemes = lag_scheme_preset(name); // throws on unknown names
    return choice;
}

ModelChoice ModelChoice::custom(LagSchemePair schemes)
{
    schemes.tau.validate();
    schemes.rho.validate();
    ModelChoice choice;
    choice.name    = "custom";
    choice.schemes = std::move(schemes);
    return choice;
}

ScenarioConfig scenario_from_json_file(const std::filesystem::path& path)
{
    try {
        return scenario_from_json(load_json(path));
    }
    catch (const json::exception& err) {
        throw ConfigError(path.string() + ": " + err.what());
    }
}

ModelChoice model_from_json_file(const std::filesystem::path& path)
{
    const json j = load_json(path);
    if (!j.contains("model")) {
        return ModelChoice{};
    }
    try {
        const auto& m = j.at("model");
        if (m.is_string()) {
            return ModelChoice::parse(m.get<std::string>());
        }
        return ModelChoice::custom({lag_scheme_from_json(m.at("tau")),
                                    lag_scheme_from_json(m.at("rho"))});
    }
    catch (const json::exception& err) {
        throw ConfigError(path.string() + ": " + err.what());
    }
}

} // namespace endemic
