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

#include "hypspec/cuts.hpp"
#include "hypspec/surface.hpp"
#include "hypspec/thick_thin.hpp"

namespace hypspec
{

struct NetworkEdge {
    std::size_t a{0};
    std::size_t b{0};
    double conductance{0};
    std::string label;  // empty for hand-built networks
};

/**
 * @brief Mass/conductance surrogate of a thick-thin decomposition
 *
 * Nodes are thick components, edges are thin collars. A collar whose ends
 * lie in the same component stays in the edge list but adds nothing to the
 * Laplacian.
 */
struct NetworkModel {
    std::vector<double> node_masses;
    std::vector<NetworkEdge> edges;
    std::vector<std::vector<std::size_t>> node_vertices;  // pants per node

    std::size_t node_count() const noexcept { return node_masses.size(); }
    double total_mass() const noexcept;
};

/// Throws InvalidInput unless masses are positive and conductances positive.
void validate_network(const NetworkModel& model);

/**
 * Node mass is thick area plus half of each incident collar volume, which
 * comes to 2π per pants. Conductance ℓ/(2 gd(w_mod)). Collars with a
 * clamped modified width count as thick.
 */
NetworkModel build_network(const PantsSurface& surface, const ThickThinDecomposition& ttd);

/// Ascending eigenvalues of M^{-1/2} L M^{-1/2}.
std::vector<double> network_spectrum(const NetworkModel& model);

/// Smallest nonzero eigenvalue; rejects disconnected networks.
double network_lambda1(const NetworkModel& model);

/**
 * @brief Rayleigh quotient of the mean-zero two-valued test function
 *
 * Sides get mass 2π per pants; each cut collar carries the optimal radial
 * profile, with conductance on the modified width, or on the maximal width
 * when the modified one is clamped to zero.
 */
double rayleigh_upper_bound(const PantsSurface& surface, const Multicut& cut);

/**
 * @brief Rayleigh quotient of a resistance-distance ramp on the network
 *
 * The test function is the shortest-path distance (edge length 1/C after
 * merging parallel collars) from one end of a double-sweep diameter,
 * shifted to mass-mean zero.
 */
double ramp_upper_bound(const NetworkModel& model);

/// Σ_e c_e (x_a - x_b)² / Σ m_i x_i² for an arbitrary node function.
double network_rayleigh_quotient(const NetworkModel& model, const std::vector<double>& x);

}  // namespace hypspec
