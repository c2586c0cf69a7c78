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
#ifndef ENDEMIC_ERRORS_HPP
#define ENDEMIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace endemic
{

/// Invalid scenario parameters, kernels, schemes or config files.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// Integration failures (step underflow, step budget exceeded, future lookups).
class SolverError : public std::runtime_error
{
public:
    explicit SolverError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// Filesystem and stream failures while writing or reading artifacts.
class IoError : public std::runtime_error
{
public:
    explicit IoError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

} // namespace endemic

#endif // ENDEMIC_ERRORS_HPP
