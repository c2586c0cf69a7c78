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
#ifndef ENDEMIC_STEP_CONTROL_HPP
#define ENDEMIC_STEP_CONTROL_HPP

namespace endemic
{

/// Adaptive step-size settings for the embedded Runge-Kutta pair.
struct StepControl
{
    double rtol = 1e-8;
    double atol = 1e-8;

    double h_init = 1e-2; ///< first step of every window (days)
    double h_min  = 1e-12;
    double h_max  = 0.5;

    long max_steps = 4000000; ///< accepted + rejected, per window

    void validate() const;
};

} // namespace endemic

#endif // ENDEMIC_STEP_CONTROL_HPP
