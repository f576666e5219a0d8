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

#include "hypspec/thick_thin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypspec/error.hpp"

namespace hypspec
{

double injectivity_epsilon_ceiling() noexcept
{
    return 0.5 / (std::numbers::e * std::numbers::e);
}

std::vector<std::string> AdmissibilityCheck::failures() const
{
    std::vector<std::string> out;
    if (!width_condition) {
        std::ostringstream os;
        os << "width: arcsinh(1/sinh eps) - 2 = " << width_value << " must be >= 1 > eps";
        out.push_back(os.str());
    }
    if (!volume_condition) {
        std::ostringstream os;
        os << "volume: Vol(T) in [" << collar_volume_min << ", " << collar_volume_max
           << "], Vol(S) in [" << shell_volume_min << ", " << shell_volume_max
           << "] must lie within [0.5, 4]";
        out.push_back(os.str());
    }
    if (!injectivity_condition) {
        std::ostringstream os;
        os << "injectivity: eps must be < 1/(2e^2) = " << injectivity_epsilon_ceiling();
        out.push_back(os.str());
    }
    return out;
}

AdmissibilityCheck epsilon_admissible(double epsilon)
{
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
        throw InvalidInput("epsilon must be positive and finite");
    }
    AdmissibilityCheck c;
    c.epsilon = epsilon;

    c.width_value = std::asinh(1.0 / std::sinh(epsilon)) - 2.0;
    c.width_condition = c.width_value >= 1.0 && 1.0 > epsilon;

    // Log-spaced down to 1e-8·2ε (the small-ℓ limit) plus a linear sweep
    // near 2ε where the collar volume is smallest.
    constexpr int kLog = 2000;
    constexpr int kLin = 2000;
    const double top = 2.0 * epsilon;
    double tmin = std::numeric_limits<double>::infinity(), tmax = 0;
    double smin = tmin, smax = 0;
    auto visit = [&](double ell) {
        const double w = modified_half_width(ell);
        const double vt = collar_volume(ell, w);
        const double vs = shell_volume(ell, w);
        tmin = std::min(tmin, vt);
        tmax = std::max(tmax, vt);
        smin = std::min(smin, vs);
        smax = std::max(smax, vs);
    };
    for (int k = 0; k < kLog; ++k) {
        visit(top * std::pow(10.0, -8.0 * (kLog - k) / kLog));
    }
    for (int k = 1; k <= kLin; ++k) visit(top * k / kLin);
    c.collar_volume_min = tmin;
    c.collar_volume_max = tmax;
    c.shell_volume_min = smin;
    c.shell_volume_max = smax;
    c.volume_condition = tmin >= 0.5 && tmax <= 4.0 && smin >= 0.5 && smax <= 4.0;

    c.injectivity_condition = epsilon < injectivity_epsilon_ceiling();
    return c;
}

ThickThinDecomposition decompose(const PantsSurface& surface, double epsilon, bool force)
{
    const auto check = epsilon_admissible(epsilon);
    if (!check.admissible() && !force) {
        throw InadmissibleEpsilon(epsilon, check.failures());
    }

    ThickThinDecomposition out;
    out.epsilon = epsilon;
    out.forced = !check.admissible();

    const auto edges = surface.edges();
    std::vector<char> thin(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].length < 2.0 * epsilon) {
            thin[i] = 1;
            out.thin_collars.push_back({i, edges[i].label, Collar::modified(edges[i].length)});
        }
    }

    auto comps = dual_components(surface, thin);
    out.component_of = comps.component_of;
    out.thick_components.assign(comps.count, {});
    for (std::size_t v = 0; v < surface.vertex_count(); ++v) {
        out.thick_components[comps.component_of[v]].push_back(v);
    }
    return out;
}

}  // namespace hypspec
