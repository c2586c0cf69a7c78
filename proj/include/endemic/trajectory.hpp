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
#ifndef ENDEMIC_TRAJECTORY_HPP
#define ENDEMIC_TRAJECTORY_HPP

#include "endemic/compartments.hpp"

#include <span>
#include <vector>

namespace endemic
{

/// Cubic Hermite interpolant of all six compartments on [t0, t1], built from
/// endpoint states and endpoint time derivatives of one accepted step.
struct HermiteSegment
{
    double t0;
    double t1;
    StateVector y0;
    StateVector y1;
    StateVector f0;
    StateVector f1;

    StateVector eval(double t) const;
    StateVector derivative(double t) const;
};

/// Dense solution history: a constant pre-zero state plus time-ordered
/// Hermite segments tiling [0, t_end] with no gaps or overlaps.
///
/// Evaluation at t <= 0 returns the history constants exactly; evaluation past
/// t_end is an error (future lookup). Breakpoints record every time where the
/// stored solution may lose smoothness (segment knots and window boundaries)
/// so that quadrature of delayed terms can split panels there.
///
/// Single-writer while the solver appends; immutable and freely shareable for
/// reads afterwards.
class Trajectory
{
public:
    explicit Trajectory(const StateVector& history_constants);

    double t_end() const;
    const StateVector& history_constants() const
    {
        return m_history;
    }

    StateVector eval(double t) const;
    double eval(double t, Compartment c) const;

    /// Appends one segment; it must start at the current t_end with a start
    /// value matching the stored end state within continuity_tolerance
    /// (relative to the larger of 1 and the state magnitude).
    void append_segment(const HermiteSegment& segment);

    /// Records a window boundary as a breakpoint (deduplicated).
    void mark_breakpoint(double t);

    std::span<const double> breakpoints() const
    {
        return m_breakpoints;
    }
    std::span<const HermiteSegment> segments() const
    {
        return m_segments;
    }

    static constexpr double continuity_tolerance = 1e-9;

private:
    StateVector m_history;
    std::vector<HermiteSegment> m_segments;
    std::vector<double> m_segment_starts; // ascending, for binary search
    std::vector<double> m_breakpoints;    // ascending, unique
};

} // namespace endemic

#endif // ENDEMIC_TRAJECTORY_HPP
