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
#include "endemic/csv.hpp"

#include "endemic/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace endemic
{

namespace
{
constexpr const char* header = "t,S,E,I,RT,RP,D";

void append_number(std::string& out, double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    out += buf;
}
} // namespace

SampledTrajectory sample_trajectory(const Trajectory& traj, std::span<const double> grid)
{
    SampledTrajectory samples;
    samples.times.reserve(grid.size());
    samples.states.reserve(grid.size());
    for (double t : grid) {
        samples.times.push_back(t);
        samples.states.push_back(traj.eval(t));
    }
    return samples;
}

std::string to_csv(const SampledTrajectory& samples)
{
    std::string out = header;
    out += '\n';
    for (std::size_t i = 0; i < samples.times.size(); ++i) {
        append_number(out, samples.times[i]);
        for (int c = 0; c < num_compartments; ++c) {
            out += ',';
            append_number(out, samples.states[i][c]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const SampledTrajectory& samples)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << to_csv(samples);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

SampledTrajectory read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw IoError(path.string() + ": expected header '" + header + "'");
    }
    SampledTrajectory samples;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string field;
        double values[1 + num_compartments];
        for (int c = 0; c < 1 + num_compartments; ++c) {
            if (!std::getline(row, field, ',')) {
                throw IoError(path.string() + ":" + std::to_string(line_no) + ": short row");
            }
            try {
                values[c] = std::stod(field);
            }
            catch (const std::exception&) {
                throw IoError(path.string() + ":" + std::to_string(line_no) +
                              ": bad number '" + field + "'");
            }
        }
        samples.times.push_back(values[0]);
        StateVector y;
        for (int c = 0; c < num_compartments; ++c) {
            y[c] = values[1 + c];
        }
        samples.states.push_back(y);
    }
    return samples;
}

} // namespace endemic
