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

#include "hypspec/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypspec/error.hpp"

namespace hypspec
{

CollarGridFunction::CollarGridFunction(double core_length, std::vector<double> rho, std::size_t n_t)
    : ell_{core_length}, rho_{std::move(rho)}, n_t_{n_t}
{
    if (!(ell_ > 0)) throw InvalidInput("grid function: core length must be > 0");
    if (rho_.size() < 2) throw InvalidInput("grid function: need at least two rho nodes");
    if (n_t_ < 1) throw InvalidInput("grid function: need at least one t node");
    for (std::size_t i = 1; i < rho_.size(); ++i) {
        if (!(rho_[i] > rho_[i - 1])) throw InvalidInput("grid function: rho nodes must increase");
    }
    values_.assign(rho_.size() * n_t_, 0.0);
}

CollarGridFunction CollarGridFunction::uniform(
    double core_length, double half_extent, std::size_t n_rho, std::size_t n_t)
{
    if (n_rho < 2) throw InvalidInput("grid function: need at least two rho nodes");
    std::vector<double> rho(n_rho);
    for (std::size_t i = 0; i < n_rho; ++i) {
        rho[i] = -half_extent + 2.0 * half_extent * static_cast<double>(i) / static_cast<double>(n_rho - 1);
    }
    return {core_length, std::move(rho), n_t};
}

CollarGridFunction CollarGridFunction::with_shell(
    double core_length, double half_width, std::size_t n_collar, std::size_t n_shell, std::size_t n_t)
{
    if (!(half_width > 0) || n_collar < 1 || n_shell < 1) {
        throw InvalidInput("grid function: shell grid needs w > 0 and at least one cell per part");
    }
    std::vector<double> rho;
    const double w = half_width;
    for (std::size_t i = 0; i < n_shell; ++i) {
        rho.push_back(-w - 1.0 + static_cast<double>(i) / static_cast<double>(n_shell));
    }
    for (std::size_t i = 0; i < n_collar; ++i) {
        rho.push_back(-w + 2.0 * w * static_cast<double>(i) / static_cast<double>(n_collar));
    }
    for (std::size_t i = 0; i <= n_shell; ++i) {
        rho.push_back(w + static_cast<double>(i) / static_cast<double>(n_shell));
    }
    return {core_length, std::move(rho), n_t};
}

void CollarGridFunction::sample(const std::function<double(double, double)>& f)
{
    for (std::size_t i = 0; i < rho_.size(); ++i) {
        for (std::size_t j = 0; j < n_t_; ++j) at(i, j) = f(rho_[i], t(j));
    }
}

namespace
{

constexpr RhoRange kEverything{-std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity()};

bool cell_inside(double r0, double r1, RhoRange region)
{
    const double tol = 1e-12 * (1.0 + std::abs(r0) + std::abs(r1));
    return r0 >= region.lo - tol && r1 <= region.hi + tol;
}

double angular_sum(const CollarGridFunction& f, std::size_t i)
{
    const auto nt = f.n_t();
    if (nt < 2) return 0.0;
    const double dt = 1.0 / static_cast<double>(nt);
    double s = 0;
    for (std::size_t j = 0; j < nt; ++j) {
        const double d = (f.at(i, (j + 1) % nt) - f.at(i, j)) / dt;
        s += d * d;
    }
    return s * dt;
}

double energy_over(const CollarGridFunction& f, RhoRange region)
{
    const auto& rho = f.rho();
    const double ell = f.core_length();
    const auto nt = f.n_t();
    const double dt = 1.0 / static_cast<double>(nt);
    double radial = 0, angular = 0;
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
        if (!cell_inside(rho[i], rho[i + 1], region)) continue;
        const double h = rho[i + 1] - rho[i];
        const double jmid = ell * std::cosh(0.5 * (rho[i] + rho[i + 1]));
        double s = 0;
        for (std::size_t j = 0; j < nt; ++j) {
            const double d = (f.at(i + 1, j) - f.at(i, j)) / h;
            s += d * d;
        }
        radial += s * dt * jmid * h;
        angular += 0.5 * h * (angular_sum(f, i) / (ell * std::cosh(rho[i])) +
                              angular_sum(f, i + 1) / (ell * std::cosh(rho[i + 1])));
    }
    return radial + angular;
}

double mass_over(const CollarGridFunction& f, RhoRange region)
{
    const auto& rho = f.rho();
    const double ell = f.core_length();
    const auto nt = f.n_t();
    const double dt = 1.0 / static_cast<double>(nt);
    auto ring = [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = 0; j < nt; ++j) s += f.at(i, j) * f.at(i, j);
        return s * dt * ell * std::cosh(rho[i]);
    };
    double total = 0;
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
        if (!cell_inside(rho[i], rho[i + 1], region)) continue;
        total += 0.5 * (rho[i + 1] - rho[i]) * (ring(i) + ring(i + 1));
    }
    return total;
}

}  // namespace

double dirichlet_energy(const CollarGridFunction& f) { return energy_over(f, kEverything); }
double dirichlet_energy(const CollarGridFunction& f, RhoRange region) { return energy_over(f, region); }
double l2_norm_sq(const CollarGridFunction& f) { return mass_over(f, kEverything); }
double l2_norm_sq(const CollarGridFunction& f, RhoRange region) { return mass_over(f, region); }

std::vector<double> dirichlet_energy_gradient(const CollarGridFunction& f)
{
    const auto& rho = f.rho();
    const double ell = f.core_length();
    const auto nt = f.n_t();
    const double dt = 1.0 / static_cast<double>(nt);
    std::vector<double> g(f.values().size(), 0.0);
    auto idx = [nt](std::size_t i, std::size_t j) { return i * nt + j; };

    // node weight for the angular term: half of each adjacent cell
    std::vector<double> node_h(rho.size(), 0.0);
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
        const double h = rho[i + 1] - rho[i];
        node_h[i] += 0.5 * h;
        node_h[i + 1] += 0.5 * h;

        const double coef = 2.0 * dt * ell * std::cosh(0.5 * (rho[i] + rho[i + 1])) / h;
        for (std::size_t j = 0; j < nt; ++j) {
            const double d = f.at(i + 1, j) - f.at(i, j);
            g[idx(i + 1, j)] += coef * d;
            g[idx(i, j)] -= coef * d;
        }
    }
    if (nt >= 2) {
        for (std::size_t i = 0; i < rho.size(); ++i) {
            const double coef = 2.0 * node_h[i] / (ell * std::cosh(rho[i]) * dt);
            for (std::size_t j = 0; j < nt; ++j) {
                const auto jn = (j + 1) % nt;
                const double d = f.at(i, jn) - f.at(i, j);
                g[idx(i, jn)] += coef * d;
                g[idx(i, j)] -= coef * d;
            }
        }
    }
    return g;
}

CrossingEnergyCheck crossing_energy_check(const CollarGridFunction& f)
{
    CrossingEnergyCheck out;
    const auto last = f.n_rho() - 1;
    out.jump = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < f.n_t(); ++j) {
        out.jump = std::min(out.jump, std::abs(f.at(last, j) - f.at(0, j)));
    }
    out.energy = dirichlet_energy(f);
    out.bound = out.jump * out.jump * f.core_length() / 4.0;
    out.pass = out.energy >= out.bound * (1.0 - 1e-10) - 1e-14;
    return out;
}

CollarGridFunction shell_cutoff(const CollarGridFunction& f, double half_width)
{
    CollarGridFunction F = f;
    const double w = half_width;
    for (std::size_t i = 0; i < f.n_rho(); ++i) {
        const double r = std::abs(f.rho()[i]);
        if (r <= w) continue;
        const double factor = std::max(0.0, w + 1.0 - r);
        for (std::size_t j = 0; j < f.n_t(); ++j) F.at(i, j) = factor * f.at(i, j);
    }
    return F;
}

CutoffExtensionCheck cutoff_extension_check(
    const CollarGridFunction& f, double half_width, double delta, double c)
{
    const double w = half_width;
    if (!(delta > 0 && delta < 1.0 / 16.0)) {
        throw HypothesisViolation("cutoff_extension_check: need 0 < delta < 1/16");
    }
    if (!(c > 0)) throw HypothesisViolation("cutoff_extension_check: need c > 0");
    const auto& rho = f.rho();
    const double tol = 1e-9 * (1.0 + w);
    if (std::abs(rho.front() + w + 1.0) > tol || std::abs(rho.back() - w - 1.0) > tol) {
        throw InvalidInput("cutoff_extension_check: grid must span [-w-1, w+1]");
    }
    auto on_node = [&](double x) {
        return std::any_of(rho.begin(), rho.end(), [&](double r) { return std::abs(r - x) <= tol; });
    };
    if (!on_node(-w) || !on_node(w)) {
        throw InvalidInput("cutoff_extension_check: collar boundary must lie on grid nodes");
    }

    const RhoRange collar{-w, w};
    const RhoRange left{-w - 1.0, -w};
    const RhoRange right{w, w + 1.0};
    const double mass_T = l2_norm_sq(f, collar);
    const double mass_S = l2_norm_sq(f, left) + l2_norm_sq(f, right);
    const double energy_S = dirichlet_energy(f, left) + dirichlet_energy(f, right);
    if (!(mass_T >= c)) throw HypothesisViolation("hypothesis 1 failed: integral over T of f^2 < c");
    if (!(mass_S <= delta * c)) throw HypothesisViolation("hypothesis 2 failed: integral over S of f^2 > delta c");
    if (!(energy_S <= delta * c)) {
        throw HypothesisViolation("hypothesis 3 failed: integral over S of |grad f|^2 > delta c");
    }

    const auto F = shell_cutoff(f, w);
    CutoffExtensionCheck out;
    out.collar_energy = dirichlet_energy(f, collar);
    out.final_bound = (1.0 - 16.0 * delta) * c / 4.0;
    out.shell_cutoff_energy = dirichlet_energy(F, left) + dirichlet_energy(F, right);
    out.shell_bound = 2.0 * mass_S + 2.0 * energy_S;
    out.cutoff_energy = dirichlet_energy(F);
    out.cutoff_mass = l2_norm_sq(F);

    const double qt = 1e-10;
    out.intermediate_pass = out.shell_cutoff_energy <= out.shell_bound * (1.0 + qt) + 1e-14;
    out.final_pass = out.collar_energy >= out.final_bound * (1.0 - qt) - 1e-14;
    return out;
}

}  // namespace hypspec
