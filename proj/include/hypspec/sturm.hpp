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
#include <vector>

namespace hypspec
{

/** @brief Symmetric tridiagonal matrix: diagonal and first off-diagonal */
struct SymmetricTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // size diag.size() - 1
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t count_eigenvalues_below(const SymmetricTridiagonal& m, double x);

/// k-th smallest eigenvalue (0-based) by bisection to near machine precision.
double tridiagonal_eigenvalue(const SymmetricTridiagonal& m, std::size_t k);

/**
 * @brief Radial Dirichlet problem of Fourier mode k on a collar
 *
 * -(cosh ρ u')'/cosh ρ + (2πk/(ℓ cosh ρ))² u = λu on [-w, w], u(±w) = 0,
 * discretized with `interior` nodes by flux-form second-order differences
 * and symmetrized by the cosh ρ mass.
 */
SymmetricTridiagonal radial_collar_operator(
    double core_length, double half_width, int mode, std::size_t interior);

struct CollarSpectrum {
    double lambda1{0};            // extrapolated, mode 0
    double coarse{0};             // mode 0 on the n, 2n, 4n grids
    double medium{0};
    double fine{0};
    double previous_extrapolation{0};
    bool converged{true};         // extrapolations agree to 1e-6 relative
    int k_max{0};
    std::vector<double> mode_lambdas;  // extrapolated, k = 0..k_max
};

/**
 * @brief First Dirichlet eigenvalue of the collar [-w, w] × S¹
 *
 * Solves modes k = 0..k_max on grids of n, 2n and 4n interior nodes and
 * Richardson-extrapolates twice; mode 0 always attains the minimum.
 */
CollarSpectrum collar_dirichlet_lambda1(double core_length, double half_width, std::size_t n = 1024);

}  // namespace hypspec
