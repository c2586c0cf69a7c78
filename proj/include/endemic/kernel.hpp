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
#ifndef ENDEMIC_KERNEL_HPP
#define ENDEMIC_KERNEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string_view>
#include <vector>

namespace endemic
{

/// A non-negative piecewise-linear delay density with compact support.
///
/// The density is defined by an ascending list of (abscissa, density) knots,
/// interpolated linearly between knots and identically zero outside
/// [support_min, support_max]. The first and last knot densities must be zero
/// so the density is continuous on all of R, and the support must lie strictly
/// in positive time: a delay of zero would let the current window feed back
/// into itself.
///
/// Construction validates the shape only; normalization (mass == 1) is
/// required where a kernel is used as a probability density (mean(), scenario
/// validation) and is checked there.
class CompactKernel
{
public:
    struct Knot
    {
        double x;       ///< abscissa (days)
        double density; ///< value (1/days)
    };

    explicit CompactKernel(std::vector<Knot> knots);

    /// Piecewise-linear density value; zero outside the support (total function).
    double operator()(double x) const;

    /// Exact integral of the density (closed-form trapezoid per segment).
    double mass() const;

    /// Exact first moment; requires mass() == 1 within mass_tolerance.
    double mean() const;

    double support_min() const
    {
        return m_knots.front().x;
    }
    double support_max() const
    {
        return m_knots.back().x;
    }
    std::span<const Knot> knots() const
    {
        return m_knots;
    }

    /// True iff |mass() - 1| <= mass_tolerance.
    bool is_normalized() const;

    /// Kernels are built from rational knot data; anything worse than this
    /// indicates a construction error.
    static constexpr double mass_tolerance = 1e-12;

private:
    std::vector<Knot> m_knots;
};

/// Triangular immunity-waning density on [200, 250] days, peak at 225.
CompactKernel ebola_phi();

/// Triangular latency density on [5, 15] days, peak at 10.
CompactKernel ebola_psi();

/// Look up a named kernel preset ("ebola_phi", "ebola_psi"); throws
/// ConfigError for unknown names.
CompactKernel kernel_preset(std::string_view name);

struct QuadratureOptions
{
    /// Target absolute accuracy of the convolution for |H| = O(1); used to cap
    /// the panel width for integrands that are not piecewise polynomial.
    double abs_tol = 1e-10;
};

namespace detail
{

/// 5-point Gauss-Legendre nodes/weights on [-1, 1]; exact through degree 9.
inline constexpr std::array<double, 5> gauss5_nodes = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0, 0.5384693101056830910,
    0.9061798459386639928};
inline constexpr std::array<double, 5> gauss5_weights = {
    0.2369268850561890875, 0.4786286704993664831, 0.5688888888888888889, 0.4786286704993664831,
    0.2369268850561890875};

/// Width cap such that the nominal 5-point Gauss error bound, summed over the
/// integration range and assuming unit-size tenth derivative, stays below
/// abs_tol. Panels narrower than the cap keep smooth non-polynomial
/// integrands within tolerance; piecewise-polynomial integrands up to degree 9
/// are exact at any width.
inline double panel_width_cap(double abs_tol, double range)
{
    constexpr double gauss5_error_coeff = 3.94e-13; // (n!)^4 / ((2n+1)((2n)!)^3) at n = 5
    const double cap = std::pow(abs_tol / (std::max(range, 1.0) * gauss5_error_coeff), 1.0 / 11.0);
    return std::clamp(cap, 1e-2, std::max(range, 1e-2));
}

} // namespace detail

/// Convolution of a history function against a kernel:
///
///   F(t) = integral of H(t - r) k(r) dr over the kernel support.
///
/// Deterministic composite quadrature: the integration range is split at every
/// kernel knot and at every history breakpoint falling inside the range, each
/// panel is capped in width and integrated with a 5-point Gauss rule. With the
/// forced splits, products of a piecewise-cubic history and a piecewise-linear
/// kernel are integrated exactly.
///
/// `history_breakpoints` must be ascending times where H loses smoothness.
/// H must be evaluable on [t - support_max, t - support_min].
template <typename History>
double convolve(History&& history, const CompactKernel& k, double t,
                std::span<const double> history_breakpoints = {},
                const QuadratureOptions& opts = {})
{
    const double a = k.support_min();
    const double b = k.support_max();

    // Panel boundaries in the lag variable r.
    std::vector<double> cuts;
    cuts.reserve(k.knots().size() + history_breakpoints.size() + 2);
    for (const auto& knot : k.knots()) {
        cuts.push_back(knot.x);
    }
    // A history breakpoint at time s maps to lag r = t - s; keep those inside
    // the open support. history_breakpoints is ascending in s, hence
    // descending in r.
    const auto first = std::upper_bound(history_breakpoints.begin(), history_breakpoints.end(),
                                        t - b);
    const auto last = std::lower_bound(history_breakpoints.begin(), history_breakpoints.end(),
                                       t - a);
    for (auto it = first; it != last; ++it) {
        cuts.push_back(t - *it);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double u, double v) { return std::abs(u - v) < 1e-12; }),
               cuts.end());

    const double width_cap = detail::panel_width_cap(opts.abs_tol, b - a);

    double total = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double panel_lo = cuts[p];
        const double panel_hi = cuts[p + 1];
        const int n_sub = std::max(1, static_cast<int>(std::ceil((panel_hi - panel_lo) / width_cap)));
        const double h = (panel_hi - panel_lo) / n_sub;
        for (int s = 0; s < n_sub; ++s) {
            const double lo = panel_lo + s * h;
            const double mid = lo + 0.5 * h;
            const double half = 0.5 * h;
            double acc = 0.0;
            for (std::size_t q = 0; q < detail::gauss5_nodes.size(); ++q) {
                const double r = mid + half * detail::gauss5_nodes[q];
                acc += detail::gauss5_weights[q] * history(t - r) * k(r);
            }
            total += acc * half;
        }
    }
    return total;
}

} // namespace endemic

#endif // ENDEMIC_KERNEL_HPP
