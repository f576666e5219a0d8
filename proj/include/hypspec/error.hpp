/*
hypspec

Copyright 2026 The hypspec Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypspec
{

/** @brief Raised for malformed or out-of-range input (CLI exit code 2) */
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/** @brief A surface description that violates one or more pants invariants */
class SurfaceValidationError : public InvalidInput
{
public:
    explicit SurfaceValidationError(std::vector<std::string> violations)
        : InvalidInput(join(violations)), violations_{std::move(violations)}
    {
    }

    const std::vector<std::string>& violations() const noexcept
    {
        return violations_;
    }

private:
    static std::string join(const std::vector<std::string>& v)
    {
        std::string out = "invalid surface description:";
        for (const auto& s : v) {
            out += "\n  - " + s;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

/** @brief Thick-thin parameter failing the admissibility checklist (exit 3) */
class InadmissibleEpsilon : public InvalidInput
{
public:
    InadmissibleEpsilon(double epsilon, std::vector<std::string> failed)
        : InvalidInput(message(epsilon, failed)), failed_{std::move(failed)}
    {
    }

    const std::vector<std::string>& failed_conditions() const noexcept
    {
        return failed_;
    }

private:
    static std::string message(double eps, const std::vector<std::string>& f)
    {
        std::string out = "epsilon " + std::to_string(eps) + " is not admissible:";
        for (const auto& s : f) {
            out += " [" + s + "]";
        }
        return out;
    }

    std::vector<std::string> failed_;
};

/** @brief Input function does not meet the hypotheses of an energy check */
class HypothesisViolation : public InvalidInput
{
public:
    using InvalidInput::InvalidInput;
};

}  // namespace hypspec
