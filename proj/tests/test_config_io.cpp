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

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace endemic;

namespace
{

std::filesystem::path write_temp(const char* name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("scenario file starts from a preset and overrides field by field")
{
    const auto path = write_temp("endemic_cfg_override.json", R"({
        "preset": "ebola",
        "horizon": 100,
        "sample_spacing": 0.5,
        "control": {"rtol": 1e-9, "h_max": 0.25},
        "history": {"c_i": 20}
    })");

    const ScenarioConfig cfg = scenario_from_json_file(path);
    CHECK(cfg.horizon == 100.0);
    CHECK(cfg.sample_spacing == 0.5);
    CHECK(cfg.control.rtol == 1e-9);
    CHECK(cfg.control.h_max == 0.25);
    CHECK(cfg.c_i == 20.0);
    // the susceptible closure is re-solved for the new history
    const double expected =
        initial_conditions(cfg.params, cfg.phi, cfg.psi, 20.0, cfg.n0, cfg.rp_zero).c_s;
    CHECK(cfg.c_s == expected);
    std::filesystem::remove(path);
}

TEST_CASE("scenario file accepts kernel knot lists and per-capita contact rates")
{
    const auto path = write_temp("endemic_cfg_kernels.json", R"({
        "params": {"beta": {"per_capita": 0.5}, "gamma": 0.1, "p": 0.9, "i_fr": 0.475},
        "kernels": {
            "phi": [[200, 0], [225, 0.04], [250, 0]],
            "psi": "ebola_psi"
        },
        "history": {"c_i": 10, "n0": 1e7, "rp_zero": true},
        "horizon": 50
    })");

    const ScenarioConfig cfg = scenario_from_json_file(path);
    CHECK(cfg.phi.support_min() == 200.0);
    CHECK(cfg.phi(225.0) == 0.04);
    CHECK(cfg.params.beta(0.0) == doctest::Approx(0.5 / 1e7).epsilon(1e-15));
    CHECK(cfg.horizon == 50.0);
    std::filesystem::remove(path);
}

TEST_CASE("scenario file accepts the seasonal contact-rate profile")
{
    const auto path = write_temp("endemic_cfg_seasonal.json", R"({
        "preset": "ebola",
        "params": {"beta": {"seasonal": {"base": 5e-8, "amplitude": 0.2, "period": 365}}},
        "horizon": 30
    })");
    const ScenarioConfig cfg = scenario_from_json_file(path);
    CHECK(!cfg.params.beta.is_constant());
    CHECK(cfg.params.beta(0.0) == doctest::Approx(5e-8).epsilon(1e-14));
    CHECK(cfg.params.beta.amplitude() == 0.2);
    std::filesystem::remove(path);
}

TEST_CASE("scenario file can pick models, including custom lag schemes")
{
    const auto preset_path = write_temp("endemic_cfg_model.json", R"({"model": "d3"})");
    const ModelChoice d3   = model_from_json_file(preset_path);
    CHECK(d3.name == "d3");
    REQUIRE(d3.schemes.has_value());
    CHECK(d3.schemes->tau.lags.size() == 3);
    std::filesystem::remove(preset_path);

    const auto custom_path = write_temp("endemic_cfg_custom.json", R"({
        "model": {
            "tau": {"lags": [8, 12], "weights": [0.5, 0.5]},
            "rho": {"lags": [220, 230], "weights": [0.5, 0.5]}
        }
    })");
    const ModelChoice custom = model_from_json_file(custom_path);
    CHECK(custom.name == "custom");
    REQUIRE(custom.schemes.has_value());
    CHECK(custom.schemes->rho.lags == std::vector<double>{220.0, 230.0});
    std::filesystem::remove(custom_path);

    const auto absent_path = write_temp("endemic_cfg_nomodel.json", R"({"horizon": 5})");
    CHECK(model_from_json_file(absent_path).is_continuous());
    std::filesystem::remove(absent_path);
}

TEST_CASE("config errors carry useful context")
{
    CHECK_THROWS_AS((void)scenario_from_json_file("/nonexistent/endemic.json"), ConfigError);

    const auto bad_json = write_temp("endemic_cfg_bad.json", "{ not json");
    CHECK_THROWS_AS((void)scenario_from_json_file(bad_json), ConfigError);
    std::filesystem::remove(bad_json);

    const auto bad_weights = write_temp("endemic_cfg_badweights.json", R"({
        "model": {"tau": {"lags": [8], "weights": [0.7]},
                   "rho": {"lags": [220], "weights": [1.0]}}
    })");
    CHECK_THROWS_AS((void)model_from_json_file(bad_weights), ConfigError);
    std::filesystem::remove(bad_weights);

    const auto bad_window = write_temp("endemic_cfg_badwindow.json", R"({"window": 12})");
    CHECK_THROWS_AS((void)scenario_from_json_file(bad_window), ConfigError);
    std::filesystem::remove(bad_window);
}

TEST_CASE("model choice parses preset names")
{
    CHECK(ModelChoice::parse("continuous").is_continuous());
    CHECK(ModelChoice::parse("d60").schemes->tau.lags.size() == 60);
    CHECK_THROWS_AS(ModelChoice::parse("d2"), ConfigError);
}
