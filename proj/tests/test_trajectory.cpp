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
#include "endemic/trajectory.hpp"

#include "endemic/csv.hpp"
#include "endemic/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace endemic;

namespace
{

StateVector constant_state(double v)
{
    return StateVector::Constant(v);
}

// Segment sampling a smooth per-compartment function with exact derivatives,
// so Hermite interpolation error is the only error source.
HermiteSegment segment_of(double t0, double t1, double (*f)(double), double (*df)(double))
{
    HermiteSegment seg;
    seg.t0 = t0;
    seg.t1 = t1;
    for (int c = 0; c < num_compartments; ++c) {
        seg.y0[c] = f(t0);
        seg.y1[c] = f(t1);
        seg.f0[c] = df(t0);
        seg.f1[c] = df(t1);
    }
    return seg;
}

double cubicish(double t)
{
    return 1.0 + t + 0.5 * t * t - 0.125 * t * t * t;
}
double dcubicish(double t)
{
    return 1.0 + t - 0.375 * t * t;
}

} // namespace

TEST_CASE("evaluation at or before zero returns the history constants exactly")
{
    Trajectory traj(constant_state(10.0));
    CHECK(traj.eval(-37.0, Compartment::I) == 10.0);
    CHECK(traj.eval(0.0, Compartment::S) == 10.0);
    CHECK(traj.eval(-1e9)[idx(Compartment::D)] == 10.0);
    CHECK(traj.t_end() == 0.0);
    CHECK_THROWS_AS((void)traj.eval(0.5), SolverError);
}

TEST_CASE("appending keeps the tiling gap- and overlap-free")
{
    Trajectory traj(constant_state(1.0));
    traj.append_segment({0.0, 5.0, constant_state(1.0), constant_state(2.0), constant_state(0.2),
                         constant_state(0.2)});
    traj.append_segment({5.0, 10.0, constant_state(2.0), constant_state(3.0), constant_state(0.2),
                         constant_state(0.2)});
    CHECK(traj.t_end() == 10.0);

    SUBCASE("gap")
    {
        CHECK_THROWS_AS(traj.append_segment({11.0, 12.0, constant_state(3.0), constant_state(3.0),
                                             constant_state(0.0), constant_state(0.0)}),
                        SolverError);
    }
    SUBCASE("overlap")
    {
        CHECK_THROWS_AS(traj.append_segment({9.0, 12.0, constant_state(3.0), constant_state(3.0),
                                             constant_state(0.0), constant_state(0.0)}),
                        SolverError);
    }
    SUBCASE("start-value mismatch")
    {
        CHECK_THROWS_AS(traj.append_segment({10.0, 12.0, constant_state(3.5), constant_state(3.5),
                                             constant_state(0.0), constant_state(0.0)}),
                        SolverError);
    }
    SUBCASE("future lookup")
    {
        CHECK_THROWS_AS((void)traj.eval(10.5), SolverError);
        CHECK(traj.eval(10.0 + 1e-13, Compartment::S) == 3.0); // roundoff slack
    }
}

TEST_CASE("evaluation is exact at segment knots and accurate in between")
{
    Trajectory traj(constant_state(cubicish(0.0)));
    const double h = 0.25;
    for (int i = 0; i < 40; ++i) {
        traj.append_segment(segment_of(i * h, (i + 1) * h, cubicish, dcubicish));
    }

    // exact at knots
    for (int i = 0; i <= 40; ++i) {
        CHECK(traj.eval(i * h, Compartment::E) == cubicish(i * h));
    }
    // cubic data is reproduced exactly by cubic Hermite (up to roundoff)
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> tdist(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double t = tdist(rng);
        CHECK(traj.eval(t, Compartment::I) == doctest::Approx(cubicish(t)).epsilon(1e-13));
    }

    // so is its derivative
    const HermiteSegment& seg = traj.segments()[3];
    for (double t : {seg.t0, 0.5 * (seg.t0 + seg.t1), seg.t1}) {
        CHECK(seg.derivative(t)[idx(Compartment::S)] ==
              doctest::Approx(dcubicish(t)).epsilon(1e-12));
    }
}

TEST_CASE("interpolation error shrinks like the fourth power of the step")
{
    const auto wave  = [](double t) { return std::sin(t); };
    const auto dwave = [](double t) { return std::cos(t); };

    double errors[2];
    int run = 0;
    for (double h : {0.5, 0.25}) {
        Trajectory traj(constant_state(0.0));
        const int n = static_cast<int>(std::round(10.0 / h));
        for (int i = 0; i < n; ++i) {
            HermiteSegment seg;
            seg.t0 = i * h;
            seg.t1 = (i + 1) * h;
            for (int c = 0; c < num_compartments; ++c) {
                seg.y0[c] = wave(seg.t0);
                seg.y1[c] = wave(seg.t1);
                seg.f0[c] = dwave(seg.t0);
                seg.f1[c] = dwave(seg.t1);
            }
            traj.append_segment(seg);
        }
        double sup = 0.0;
        for (double t = 0.01; t < 10.0; t += 0.037) {
            sup = std::max(sup, std::abs(traj.eval(t, Compartment::S) - wave(t)));
        }
        errors[run++] = sup;
    }
    CHECK(errors[1] <= errors[0] / 12.0); // ~16x for O(h^4)
}

TEST_CASE("breakpoints record segment knots and window marks")
{
    Trajectory traj(constant_state(1.0));
    traj.append_segment({0.0, 2.0, constant_state(1.0), constant_state(1.0), constant_state(0.0),
                         constant_state(0.0)});
    traj.mark_breakpoint(2.0); // duplicate, must not double up
    traj.append_segment({2.0, 4.0, constant_state(1.0), constant_state(1.0), constant_state(0.0),
                         constant_state(0.0)});
    const auto bp = traj.breakpoints();
    REQUIRE(bp.size() == 3);
    CHECK(bp[0] == 0.0);
    CHECK(bp[1] == 2.0);
    CHECK(bp[2] == 4.0);
}

TEST_CASE("CSV round-trip: parsing an emitted file and re-emitting is byte-identical")
{
    Trajectory traj(constant_state(cubicish(0.0)));
    for (int i = 0; i < 8; ++i) {
        traj.append_segment(segment_of(i * 1.25, (i + 1) * 1.25, cubicish, dcubicish));
    }
    std::vector<double> grid;
    for (double t = 0.0; t <= 10.0; t += 1.0) {
        grid.push_back(t);
    }
    const SampledTrajectory samples = sample_trajectory(traj, grid);
    CHECK(samples.times.size() == 11);

    const auto path = std::filesystem::temp_directory_path() / "endemic_roundtrip.csv";
    write_csv(path, samples);
    const std::string first = to_csv(read_csv(path));
    const std::string again = to_csv(read_csv(path));

    std::ifstream in(path, std::ios::binary);
    std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(first == on_disk);
    CHECK(first == again);
    std::filesystem::remove(path);
}

TEST_CASE("CSV reader rejects malformed files")
{
    const auto dir = std::filesystem::temp_directory_path();

    const auto write = [&](const char* name, const char* content) {
        const auto path = dir / name;
        std::ofstream(path) << content;
        return path;
    };

    const auto bad_header = write("endemic_badheader.csv", "time,S,E,I,RT,RP,D\n0,1,2,3,4,5,6\n");
    CHECK_THROWS_AS((void)read_csv(bad_header), IoError);

    const auto short_row = write("endemic_shortrow.csv", "t,S,E,I,RT,RP,D\n0,1,2,3\n");
    CHECK_THROWS_AS((void)read_csv(short_row), IoError);

    const auto bad_number = write("endemic_badnum.csv", "t,S,E,I,RT,RP,D\n0,1,2,x,4,5,6\n");
    CHECK_THROWS_AS((void)read_csv(bad_number), IoError);

    CHECK_THROWS_AS((void)read_csv(dir / "endemic_missing.csv"), IoError);

    std::filesystem::remove(bad_header);
    std::filesystem::remove(short_row);
    std::filesystem::remove(bad_number);
}
