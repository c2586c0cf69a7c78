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

#include "endemic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace endemic
{

StateVector HermiteSegment::eval(double t) const
{
    const double h     = t1 - t0;
    const double theta = (t - t0) / h;
    const double s     = theta * theta;
    const double c     = s * theta;
    const double h00   = 2.0 * c - 3.0 * s + 1.0;
    const double h10   = c - 2.0 * s + theta;
    const double h01   = -2.0 * c + 3.0 * s;
    const double h11   = c - s;
    return h00 * y0 + (h10 * h) * f0 + h01 * y1 + (h11 * h) * f1;
}

StateVector HermiteSegment::derivative(double t) const
{
    const double h     = t1 - t0;
    const double theta = (t - t0) / h;
    const double s     = theta * theta;
    const double d00   = (6.0 * s - 6.0 * theta) / h;
    const double d10   = 3.0 * s - 4.0 * theta + 1.0;
    const double d01   = (-6.0 * s + 6.0 * theta) / h;
    const double d11   = 3.0 * s - 2.0 * theta;
    return d00 * y0 + d10 * f0 + d01 * y1 + d11 * f1;
}

Trajectory::Trajectory(const StateVector& history_constants)
    : m_history(history_constants)
{
    m_breakpoints.push_back(0.0);
}

double Trajectory::t_end() const
{
    return m_segments.empty() ? 0.0 : m_segments.back().t1;
}

StateVector Trajectory::eval(double t) const
{
    if (t <= 0.0) {
        return m_history;
    }
    const double end = t_end();
    if (t > end) {
        if (t > end + 1e-9 * std::max(1.0, end)) {
            throw SolverError("future lookup at t = " + std::to_string(t) + ", solution ends at " +
                              std::to_string(end));
        }
        t = end;
    }
    if (m_segments.empty()) {
        return m_history; // t_end == 0, only the initial state exists
    }
    auto it = std::upper_bound(m_segment_starts.begin(), m_segment_starts.end(), t);
    const std::size_t i = (it == m_segment_starts.begin()) ? 0 : (it - m_segment_starts.begin()) - 1;
    const HermiteSegment& seg = m_segments[i];
    if (t >= seg.t1) {
        return seg.y1; // exact at knots
    }
    if (t <= seg.t0) {
        return seg.y0;
    }
    return seg.eval(t);
}

double Trajectory::eval(double t, Compartment c) const
{
    return eval(t)[idx(c)];
}

void Trajectory::append_segment(const HermiteSegment& segment)
{
    const double end = t_end();
    if (!(segment.t1 > segment.t0)) {
        throw SolverError("segment must have positive length");
    }
    const double time_tol = 1e-9 * std::max(1.0, std::abs(end));
    if (std::abs(segment.t0 - end) > time_tol) {
        throw SolverError("segment start " + std::to_string(segment.t0) +
                          " does not meet the stored end " + std::to_string(end) +
                          (segment.t0 > end ? " (gap)" : " (overlap)"));
    }
    const StateVector at_end = m_segments.empty() ? m_history : m_segments.back().y1;
    const double scale = std::max({1.0, at_end.cwiseAbs().maxCoeff(),
                                   segment.y0.cwiseAbs().maxCoeff()});
    if ((segment.y0 - at_end).cwiseAbs().maxCoeff() > continuity_tolerance * scale) {
        throw SolverError("segment start value does not match the stored solution at t = " +
                          std::to_string(end));
    }
    m_segments.push_back(segment);
    m_segment_starts.push_back(segment.t0);
    mark_breakpoint(segment.t1);
}

void Trajectory::mark_breakpoint(double t)
{
    auto it = std::lower_bound(m_breakpoints.begin(), m_breakpoints.end(), t - 1e-12);
    if (it != m_breakpoints.end() && std::abs(*it - t) <= 1e-12) {
        return;
    }
    m_breakpoints.insert(it, t);
}

} // namespace endemic
