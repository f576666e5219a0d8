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

#include "hypspec/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hypspec/error.hpp"

namespace hypspec
{

std::size_t count_eigenvalues_below(const SymmetricTridiagonal& m, double x)
{
    // LDLᵀ pivots of (T - xI); negatives count eigenvalues below x
    std::size_t count = 0;
    double d = 1.0;
    const double tiny = std::numeric_limits<double>::min();
    for (std::size_t i = 0; i < m.diag.size(); ++i) {
        const double b2 = i == 0 ? 0.0 : m.off[i - 1] * m.off[i - 1];
        d = (m.diag[i] - x) - (i == 0 ? 0.0 : b2 / d);
        if (d == 0.0) d = -tiny;
        if (d < 0) ++count;
    }
    return count;
}

double tridiagonal_eigenvalue(const SymmetricTridiagonal& m, std::size_t k)
{
    const auto n = m.diag.size();
    if (n == 0 || k >= n) throw InvalidInput("tridiagonal_eigenvalue: index out of range");
    if (m.off.size() + 1 != n) throw InvalidInput("tridiagonal_eigenvalue: bad off-diagonal size");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(m.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(m.off[i]) : 0.0);
        lo = std::min(lo, m.diag[i] - r);
        hi = std::max(hi, m.diag[i] + r);
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_eigenvalues_below(m, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SymmetricTridiagonal radial_collar_operator(
    double core_length, double half_width, int mode, std::size_t interior)
{
    if (!(core_length > 0)) throw InvalidInput("radial_collar_operator: core length must be > 0");
    if (!(half_width > 0)) throw InvalidInput("radial_collar_operator: half-width must be > 0");
    if (interior < 2) throw InvalidInput("radial_collar_operator: need at least two nodes");

    const double h = 2.0 * half_width / static_cast<double>(interior + 1);
    const double inv_h2 = 1.0 / (h * h);
    const double freq = 2.0 * std::numbers::pi * mode / core_length;
    auto rho = [&](double i) { return -half_width + i * h; };

    SymmetricTridiagonal m;
    m.diag.resize(interior);
    m.off.resize(interior - 1);
    for (std::size_t i = 0; i < interior; ++i) {
        const double node = rho(static_cast<double>(i + 1));
        const double J = std::cosh(node);
        const double Jm = std::cosh(rho(i + 0.5));
        const double Jp = std::cosh(rho(i + 1.5));
        const double pot = freq / J;
        m.diag[i] = (Jm + Jp) * inv_h2 / J + pot * pot;
        if (i + 1 < interior) {
            const double Jn = std::cosh(rho(static_cast<double>(i + 2)));
            m.off[i] = -Jp * inv_h2 / std::sqrt(J * Jn);
        }
    }
    return m;
}

namespace
{

struct ModeSolve {
    double coarse, medium, fine, ext1, ext2;
};

ModeSolve solve_mode(double ell, double w, int k, std::size_t n)
{
    ModeSolve s{};
    // interior counts n, 2n+1, 4n+3 halve the spacing each time
    s.coarse = tridiagonal_eigenvalue(radial_collar_operator(ell, w, k, n), 0);
    s.medium = tridiagonal_eigenvalue(radial_collar_operator(ell, w, k, 2 * n + 1), 0);
    s.fine = tridiagonal_eigenvalue(radial_collar_operator(ell, w, k, 4 * n + 3), 0);
    s.ext1 = (4.0 * s.medium - s.coarse) / 3.0;
    s.ext2 = (4.0 * s.fine - s.medium) / 3.0;
    return s;
}

}  // namespace

CollarSpectrum collar_dirichlet_lambda1(double core_length, double half_width, std::size_t n)
{
    if (n < 64) throw InvalidInput("collar_dirichlet_lambda1: grid size must be >= 64");

    CollarSpectrum out;
    const auto m0 = solve_mode(core_length, half_width, 0, n);
    out.coarse = m0.coarse;
    out.medium = m0.medium;
    out.fine = m0.fine;
    out.previous_extrapolation = m0.ext1;
    out.lambda1 = m0.ext2;
    out.converged = std::abs(m0.ext2 - m0.ext1) <= 1e-6 * std::abs(m0.ext2);

    // Modes k ≥ 1 only add a nonnegative potential, so they never undercut
    // mode 0; solve a few to report them and confirm.
    const double target = 4.0 * out.lambda1;
    out.k_max = static_cast<int>(std::ceil(core_length * std::sqrt(target) / (2.0 * std::numbers::pi))) + 2;
    out.mode_lambdas.push_back(out.lambda1);
    for (int k = 1; k <= out.k_max; ++k) {
        out.mode_lambdas.push_back(solve_mode(core_length, half_width, k, n).ext2);
    }
    return out;
}

}  // namespace hypspec
