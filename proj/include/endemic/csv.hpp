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
#ifndef ENDEMIC_CSV_HPP
#define ENDEMIC_CSV_HPP

#include "endemic/compartments.hpp"
#include "endemic/trajectory.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace endemic
{

struct SampledTrajectory
{
    std::vector<double> times;
    std::vector<StateVector> states;
};

SampledTrajectory sample_trajectory(const Trajectory& traj, std::span<const double> grid);

/// Header `t,S,E,I,RT,RP,D`, decimal with 12 significant digits, one
/// newline-terminated row per sample.
std::string to_csv(const SampledTrajectory& samples);

void write_csv(const std::filesystem::path& path, const SampledTrajectory& samples);

SampledTrajectory read_csv(const std::filesystem::path& path);

} // namespace endemic

#endif // ENDEMIC_CSV_HPP
