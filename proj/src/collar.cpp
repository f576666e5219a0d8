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

#include "hypspec/collar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypspec/error.hpp"

namespace hypspec
{
namespace
{

void require_positive_length(double ell, const char* where)
{
    if (!(ell > 0) || !std::isfinite(ell)) {
        std::ostringstream os;
        os << where << ": core length must be positive and finite, got " << ell;
        throw InvalidInput(os.str());
    }
}

// Signed circle offset folded into [-1/2, 1/2].
double fold(double dt)
{
    dt -= std::round(dt);
    return dt;
}

}  // namespace

double max_half_width(double core_length)
{
    require_positive_length(core_length, "max_half_width");
    // arcsinh(1/sinh x) = -log tanh(x/2), with x = ℓ/2
    if (core_length < 1.0) return -std::log(std::tanh(0.25 * core_length));
    return -std::log1p(-2.0 / (std::exp(0.5 * core_length) + 1.0));
}

double modified_half_width(double core_length)
{
    return std::max(0.0, max_half_width(core_length) - 2.0);
}

double gudermannian(double w) noexcept
{
    return 2.0 * std::atan(std::tanh(0.5 * w));
}

double collar_conductance(double core_length, double half_width)
{
    require_positive_length(core_length, "collar_conductance");
    if (!(half_width > 0)) {
        throw InvalidInput("collar_conductance: half-width must be positive");
    }
    return core_length / (2.0 * gudermannian(half_width));
}

PolarPoint fermi_to_polar(FermiPoint p, double core_length)
{
    require_positive_length(core_length, "fermi_to_polar");
    return {std::exp(core_length * p.t), 2.0 * std::atan(std::exp(-p.rho))};
}

FermiPoint polar_to_fermi(PolarPoint p, double core_length)
{
    require_positive_length(core_length, "polar_to_fermi");
    if (!(p.r > 0) || !(p.theta > 0) || !(p.theta < std::numbers::pi)) {
        throw InvalidInput("polar_to_fermi: need r > 0 and theta in (0, pi)");
    }
    return {-std::log(std::tan(0.5 * p.theta)), std::log(p.r) / core_length};
}

std::complex<double> to_upper_half_plane(PolarPoint p) noexcept
{
    return std::polar(p.r, p.theta);
}

double uhp_distance(std::complex<double> z, std::complex<double> w)
{
    if (!(z.imag() > 0) || !(w.imag() > 0)) {
        throw InvalidInput("uhp_distance: points must lie in the upper half-plane");
    }
    // cosh d = 1 + |z-w|^2 / (2 Im z Im w), written via sinh(d/2) for accuracy
    return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.imag() * w.imag())));
}

double same_rho_geodesic_length(double rho, double t, double core_length)
{
    require_positive_length(core_length, "same_rho_geodesic_length");
    return 2.0 * std::asinh(std::sinh(0.5 * t * core_length) * std::cosh(rho));
}

double injectivity_radius_on_core_normal(double rho, double core_length)
{
    require_positive_length(core_length, "injectivity_radius_on_core_normal");
    return std::asinh(std::sinh(0.5 * core_length) * std::cosh(rho));
}

double collar_volume(double core_length, double half_width)
{
    require_positive_length(core_length, "collar_volume");
    if (!(half_width >= 0)) throw InvalidInput("collar_volume: half-width must be >= 0");
    return 2.0 * core_length * std::sinh(half_width);
}

double shell_volume(double core_length, double half_width)
{
    require_positive_length(core_length, "shell_volume");
    if (!(half_width >= 0)) throw InvalidInput("shell_volume: half-width must be >= 0");
    return 2.0 * core_length * (std::sinh(half_width + 1.0) - std::sinh(half_width));
}

DetourLengths shell_detour_length(FermiPoint p, FermiPoint q, double core_length)
{
    require_positive_length(core_length, "shell_detour_length");
    if ((p.rho < 0) != (q.rho < 0) && p.rho != 0 && q.rho != 0) {
        throw InvalidInput("shell_detour_length: points lie on opposite sides of the core");
    }
    if (std::abs(q.rho) < std::abs(p.rho)) std::swap(p, q);

    const double dt = fold(q.t - p.t);
    const auto zp = to_upper_half_plane(fermi_to_polar(p, core_length));
    // nearest lift of q under the deck translation z -> e^ℓ z
    const auto zq = to_upper_half_plane(fermi_to_polar({q.rho, p.t + dt}, core_length));

    DetourLengths out;
    out.direct = uhp_distance(zp, zq);
    out.detour = std::abs(dt) * core_length * std::cosh(p.rho) + std::abs(q.rho - p.rho);
    return out;
}

Collar::Collar(double core_length, double half_width, bool has_shell)
    : core_length_{core_length}, half_width_{half_width}, has_shell_{has_shell}
{
    require_positive_length(core_length, "Collar");
    if (!(half_width >= 0)) throw InvalidInput("Collar: half-width must be >= 0");
    // small slack for widths computed through a different but equal route
    if (half_width > max_half_width(core_length) * (1 + 1e-12)) {
        throw InvalidInput("Collar: half-width exceeds the maximal embedded collar");
    }
}

Collar Collar::maximal(double core_length)
{
    return {core_length, max_half_width(core_length), false};
}

Collar Collar::modified(double core_length)
{
    return {core_length, modified_half_width(core_length), true};
}

bool Collar::contains(FermiPoint p) const noexcept
{
    const double limit = half_width_ + (has_shell_ ? 1.0 : 0.0);
    return std::abs(p.rho) <= limit;
}

}  // namespace hypspec
