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
#include "endemic/kernel.hpp"

#include "endemic/errors.hpp"

#include <string>

namespace endemic
{

CompactKernel::CompactKernel(std::vector<Knot> knots)
    : m_knots(std::move(knots))
{
    if (m_knots.size() < 2) {
        throw ConfigError("kernel needs at least two knots");
    }
    if (m_knots.front().x <= 0.0) {
        throw ConfigError("kernel support must start at a strictly positive delay, got " +
                          std::to_string(m_knots.front().x));
    }
    for (std::size_t i = 0; i + 1 < m_knots.size(); ++i) {
        if (!(m_knots[i].x < m_knots[i + 1].x)) {
            throw ConfigError("kernel knot abscissas must be strictly ascending");
        }
    }
    for (const auto& knot : m_knots) {
        if (!(knot.density >= 0.0)) {
            throw ConfigError("kernel density must be non-negative at every knot");
        }
    }
    if (m_knots.front().density != 0.0 || m_knots.back().density != 0.0) {
        throw ConfigError("kernel density must vanish at the first and last knot");
    }
}

double CompactKernel::operator()(double x) const
{
    if (x <= m_knots.front().x || x >= m_knots.back().x) {
        return 0.0;
    }
    const auto it = std::upper_bound(m_knots.begin(), m_knots.end(), x,
                                     [](double v, const Knot& knot) { return v < knot.x; });
    const Knot& hi = *it;
    const Knot& lo = *(it - 1);
    const double w = (x - lo.x) / (hi.x - lo.x);
    return lo.density + w * (hi.density - lo.density);
}

double CompactKernel::mass() const
{
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < m_knots.size(); ++i) {
        total += 0.5 * (m_knots[i].density + m_knots[i + 1].density) *
                 (m_knots[i + 1].x - m_knots[i].x);
    }
    return total;
}

double CompactKernel::mean() const
{
    if (!is_normalized()) {
        throw ConfigError("kernel mean requires a normalized density, mass is " +
                          std::to_string(mass()));
    }
    // First moment of a linear segment on [a, b] with densities (da, db):
    //   integral x rho(x) dx = (b - a) (da (2a + b) + db (a + 2b)) / 6.
    double moment = 0.0;
    for (std::size_t i = 0; i + 1 < m_knots.size(); ++i) {
        const double a  = m_knots[i].x;
        const double b  = m_knots[i + 1].x;
        const double da = m_knots[i].density;
        const double db = m_knots[i + 1].density;
        moment += (b - a) * (da * (2.0 * a + b) + db * (a + 2.0 * b)) / 6.0;
    }
    return moment;
}

bool CompactKernel::is_normalized() const
{
    return std::abs(mass() - 1.0) <= mass_tolerance;
}

CompactKernel ebola_phi()
{
    return CompactKernel({{200.0, 0.0}, {225.0, 1.0 / 25.0}, {250.0, 0.0}});
}

CompactKernel ebola_psi()
{
    return CompactKernel({{5.0, 0.0}, {10.0, 1.0 / 5.0}, {15.0, 0.0}});
}

CompactKernel kernel_preset(std::string_view name)
{
    if (name == "ebola_phi") {
        return ebola_phi();
    }
    if (name == "ebola_psi") {
        return ebola_psi();
    }
    throw ConfigError("unknown kernel preset '" + std::string(name) + "'");
}

} // namespace endemic
