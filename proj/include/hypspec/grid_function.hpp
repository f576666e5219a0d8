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
#include <functional>
#include <vector>

namespace hypspec
{

/**
 * @brief Nodal function on a collar grid [ρ₀, ρ_m] × S¹
 *
 * ρ nodes are strictly increasing (piecewise-uniform grids keep the collar
 * boundary on a node); t has n_t periodic nodes at j/n_t. Values are stored
 * row-major, index i·n_t + j.
 *
 * The quadrature is a fixed quadratic form: radial differences at cell
 * midpoints with weight ℓ cosh ρ, angular forward differences at nodes with
 * metric factor 1/(ℓ cosh ρ), trapezoid in ρ, rectangle (exact for the
 * periodic trigonometric part) in t.
 */
class CollarGridFunction
{
public:
    CollarGridFunction(double core_length, std::vector<double> rho, std::size_t n_t);

    /// n_rho nodes uniformly on [-W, W].
    static CollarGridFunction uniform(double core_length, double half_extent, std::size_t n_rho, std::size_t n_t);

    /// Collar [-w, w] with n_collar cells plus unit shells with n_shell cells each.
    static CollarGridFunction with_shell(
        double core_length, double half_width, std::size_t n_collar, std::size_t n_shell, std::size_t n_t);

    double core_length() const noexcept { return ell_; }
    const std::vector<double>& rho() const noexcept { return rho_; }
    std::size_t n_rho() const noexcept { return rho_.size(); }
    std::size_t n_t() const noexcept { return n_t_; }
    double t(std::size_t j) const noexcept { return static_cast<double>(j) / static_cast<double>(n_t_); }

    double& at(std::size_t i, std::size_t j) { return values_[i * n_t_ + j]; }
    double at(std::size_t i, std::size_t j) const { return values_[i * n_t_ + j]; }
    std::vector<double>& values() noexcept { return values_; }
    const std::vector<double>& values() const noexcept { return values_; }

    void sample(const std::function<double(double rho, double t)>& f);

private:
    double ell_;
    std::vector<double> rho_;
    std::size_t n_t_;
    std::vector<double> values_;
};

/** @brief Closed ρ-range selecting whole cells of the grid */
struct RhoRange {
    double lo;
    double hi;
};

double dirichlet_energy(const CollarGridFunction& f);
double dirichlet_energy(const CollarGridFunction& f, RhoRange region);
double l2_norm_sq(const CollarGridFunction& f);
double l2_norm_sq(const CollarGridFunction& f, RhoRange region);

/// ∂E/∂(node value), same layout as values().
std::vector<double> dirichlet_energy_gradient(const CollarGridFunction& f);

struct CrossingEnergyCheck {
    double energy{0};
    double jump{0};   // min over t of |f(w, t) - f(-w, t)|
    double bound{0};  // jump² ℓ / 4
    bool pass{false};
};

/// Reflected-boundary jump bound over the whole grid (which is the collar).
CrossingEnergyCheck crossing_energy_check(const CollarGridFunction& f);

struct CutoffExtensionCheck {
    double collar_energy{0};       // ∫_T |∇f|²
    double final_bound{0};         // (1 - 16δ) c / 4
    double shell_cutoff_energy{0};  // ∫_S |∇F|²
    double shell_bound{0};         // 2∫_S f² + 2∫_S |∇f|²
    double cutoff_energy{0};       // ∫_{T∪S} |∇F|²
    double cutoff_mass{0};         // ∫_{T∪S} F²
    bool intermediate_pass{false};
    bool final_pass{false};
    bool pass() const noexcept { return intermediate_pass && final_pass; }
};

/**
 * @brief Shell cutoff argument: F = (w + 1 - |ρ|) f on the shell
 *
 * The grid must span [-w-1, w+1] with nodes at ±w. Requires 0 < δ < 1/16 and
 * the three hypotheses ∫_T f² ≥ c, ∫_S f² ≤ δc, ∫_S |∇f|² ≤ δc; throws
 * HypothesisViolation naming the first that fails.
 */
CutoffExtensionCheck cutoff_extension_check(
    const CollarGridFunction& f, double half_width, double delta, double c);

/// The cutoff F used by cutoff_extension_check.
CollarGridFunction shell_cutoff(const CollarGridFunction& f, double half_width);

}  // namespace hypspec
