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

#include <complex>

namespace hypspec
{

/// Half-width of the maximal embedded collar, arcsinh(1/sinh(ℓ/2)).
double max_half_width(double core_length);

/// Half-width of the modified thin collar, max(0, max_half_width - 2).
double modified_half_width(double core_length);

/// gd(w) = 2 arctan(tanh(w/2)) = ∫₀^w sech.
double gudermannian(double w) noexcept;

/// Lowest crossing energy ℓ/(2 gd(w)) of a unit jump across a collar.
double collar_conductance(double core_length, double half_width);

/** @brief Fermi coordinates on a collar: signed distance and core position */
struct FermiPoint {
    double rho{0};
    double t{0};
};

/** @brief Polar coordinates of the lift to the upper half-plane */
struct PolarPoint {
    double r{1};
    double theta{0};
};

PolarPoint fermi_to_polar(FermiPoint p, double core_length);
FermiPoint polar_to_fermi(PolarPoint p, double core_length);
std::complex<double> to_upper_half_plane(PolarPoint p) noexcept;

/// Hyperbolic distance in the upper half-plane.
double uhp_distance(std::complex<double> z, std::complex<double> w);

/// Length of the geodesic homotopic to s ↦ (ρ, s), 0 ≤ s ≤ t.
double same_rho_geodesic_length(double rho, double t, double core_length);

double injectivity_radius_on_core_normal(double rho, double core_length);

/// 2ℓ sinh w.
double collar_volume(double core_length, double half_width);
/// 2ℓ (sinh(w+1) - sinh w): the two unit annuli beyond ±w.
double shell_volume(double core_length, double half_width);

struct DetourLengths {
    double direct{0};
    double detour{0};
};

/**
 * @brief Direct distance vs. the arc-then-radial path inside a shell
 *
 * Both points must sit on the same side of the core. The detour runs along
 * the circle of the point closer to the core, then radially.
 */
DetourLengths shell_detour_length(FermiPoint p, FermiPoint q, double core_length);

/** @brief Embedded cylinder around a closed geodesic */
class Collar
{
public:
    Collar(double core_length, double half_width, bool has_shell = false);

    static Collar maximal(double core_length);
    /// Modified thin-part collar, carrying its shell.
    static Collar modified(double core_length);

    double core_length() const noexcept { return core_length_; }
    double half_width() const noexcept { return half_width_; }
    bool has_shell() const noexcept { return has_shell_; }

    double volume() const { return collar_volume(core_length_, half_width_); }
    double shell_volume() const { return hypspec::shell_volume(core_length_, half_width_); }
    bool contains(FermiPoint p) const noexcept;

private:
    double core_length_;
    double half_width_;
    bool has_shell_;
};

}  // namespace hypspec
