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
#ifndef ENDEMIC_COMPARTMENTS_HPP
#define ENDEMIC_COMPARTMENTS_HPP

#include <Eigen/Dense>

#include <array>
#include <string_view>

namespace endemic
{

/// One population state: susceptible, exposed, infectious, temporarily
/// recovered, permanently recovered and dead individuals at a single time.
using StateVector = Eigen::Matrix<double, 6, 1>;

enum class Compartment : int
{
    S  = 0, ///< susceptible
    E  = 1, ///< exposed (latent)
    I  = 2, ///< infectious
    RT = 3, ///< recovered with temporary immunity
    RP = 4, ///< recovered with permanent immunity
    D  = 5, ///< disease deaths
    Count
};

inline constexpr int num_compartments = static_cast<int>(Compartment::Count);

inline constexpr Eigen::Index idx(Compartment c)
{
    return static_cast<Eigen::Index>(c);
}

inline constexpr std::array<std::string_view, num_compartments> compartment_names{"S", "E", "I",
                                                                                  "RT", "RP", "D"};

} // namespace endemic

#endif // ENDEMIC_COMPARTMENTS_HPP
