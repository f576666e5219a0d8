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

#include <cstddef>
#include <string>
#include <vector>

#include "hypspec/collar.hpp"
#include "hypspec/surface.hpp"

namespace hypspec
{

/// Default thick-thin parameter.
inline constexpr double kDefaultEpsilon = 0.05;

/** @brief Pass/fail per admissibility condition, with the observed values */
struct AdmissibilityCheck {
    double epsilon{0};

    /// arcsinh(1/sinh ε) - 2 ≥ 1 > ε
    bool width_condition{false};
    double width_value{0};

    /// Vol(T), Vol(S) ∈ [1/2, 4] for ℓ on a grid of (0, 2ε]
    bool volume_condition{false};
    double collar_volume_min{0};
    double collar_volume_max{0};
    double shell_volume_min{0};
    double shell_volume_max{0};

    /// ε < 1/(2e²)
    bool injectivity_condition{false};

    bool admissible() const noexcept
    {
        return width_condition && volume_condition && injectivity_condition;
    }
    std::vector<std::string> failures() const;
};

AdmissibilityCheck epsilon_admissible(double epsilon);

/// 1/(2e²), the injectivity-radius ceiling on ε.
double injectivity_epsilon_ceiling() noexcept;

struct ThinCollar {
    std::size_t edge{0};
    std::string label;
    Collar collar;
};

/**
 * @brief ε-modified thick-thin decomposition over the pants curves
 *
 * Thin collars are the curves shorter than 2ε, widened to the modified
 * half-width. Thick components are the dual-graph components after deleting
 * the thin curves, ordered by their smallest vertex.
 */
struct ThickThinDecomposition {
    double epsilon{0};
    bool forced{false};
    std::vector<ThinCollar> thin_collars;
    std::vector<std::vector<std::size_t>> thick_components;
    std::vector<std::size_t> component_of;  // per vertex
};

/**
 * Throws InadmissibleEpsilon naming the failed conditions unless `force`, in
 * which case the result carries `forced = true`.
 */
ThickThinDecomposition decompose(
    const PantsSurface& surface, double epsilon, bool force = false);

}  // namespace hypspec
