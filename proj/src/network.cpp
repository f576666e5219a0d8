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

#include "hypspec/network.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>

#include "hypspec/collar.hpp"
#include "hypspec/error.hpp"

namespace hypspec
{

double NetworkModel::total_mass() const noexcept
{
    return std::accumulate(node_masses.begin(), node_masses.end(), 0.0);
}

void validate_network(const NetworkModel& model)
{
    if (model.node_count() < 2) throw InvalidInput("network needs at least two nodes");
    for (double m : model.node_masses) {
        if (!(m > 0) || !std::isfinite(m)) throw InvalidInput("network node masses must be positive");
    }
    for (const auto& e : model.edges) {
        if (e.a >= model.node_count() || e.b >= model.node_count()) {
            throw InvalidInput("network edge references a missing node");
        }
        if (!(e.conductance > 0) || !std::isfinite(e.conductance)) {
            throw InvalidInput("network conductances must be positive");
        }
    }
}

NetworkModel build_network(const PantsSurface& surface, const ThickThinDecomposition& ttd)
{
    const auto edges = surface.edges();
    std::vector<char> cut(edges.size(), 0);
    bool any = false;
    for (const auto& tc : ttd.thin_collars) {
        if (tc.collar.half_width() > 0) {
            cut[tc.edge] = 1;
            any = true;
        }
    }
    // clamped collars are thick, so components are recomputed here
    const auto comps = dual_components(surface, cut);
    if (!any || comps.count < 2) {
        throw InvalidInput("no thin separating system; use rayleigh_upper on an explicit cut instead");
    }

    NetworkModel model;
    model.node_masses.assign(comps.count, 0.0);
    model.node_vertices.resize(comps.count);
    for (std::size_t v = 0; v < surface.vertex_count(); ++v) {
        model.node_vertices[comps.component_of[v]].push_back(v);
    }

    // thick area: 2π per pants minus the collar halves poking into it
    for (std::size_t v = 0; v < surface.vertex_count(); ++v) {
        model.node_masses[comps.component_of[v]] += 2.0 * std::numbers::pi;
    }
    std::vector<double> thick_area = model.node_masses;
    for (const auto& tc : ttd.thin_collars) {
        if (!cut[tc.edge]) continue;
        const auto& e = edges[tc.edge];
        const double half = 0.5 * tc.collar.volume();
        thick_area[comps.component_of[e.a]] -= half;
        thick_area[comps.component_of[e.b]] -= half;
    }
    for (std::size_t n = 0; n < comps.count; ++n) model.node_masses[n] = thick_area[n];
    for (const auto& tc : ttd.thin_collars) {
        if (!cut[tc.edge]) continue;
        const auto& e = edges[tc.edge];
        const double half = 0.5 * tc.collar.volume();
        model.node_masses[comps.component_of[e.a]] += half;
        model.node_masses[comps.component_of[e.b]] += half;
        model.edges.push_back({comps.component_of[e.a], comps.component_of[e.b],
                               collar_conductance(tc.collar.core_length(), tc.collar.half_width()),
                               tc.label});
    }
    validate_network(model);
    return model;
}

namespace
{

bool connected(const NetworkModel& model)
{
    std::vector<std::vector<std::size_t>> adj(model.node_count());
    for (const auto& e : model.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(model.node_count(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == model.node_count();
}

}  // namespace

std::vector<double> network_spectrum(const NetworkModel& model)
{
    validate_network(model);
    const auto n = static_cast<Eigen::Index>(model.node_count());
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : model.edges) {
        if (e.a == e.b) continue;
        const auto a = static_cast<Eigen::Index>(e.a);
        const auto b = static_cast<Eigen::Index>(e.b);
        L(a, a) += e.conductance;
        L(b, b) += e.conductance;
        L(a, b) -= e.conductance;
        L(b, a) -= e.conductance;
    }
    Eigen::VectorXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = 1.0 / std::sqrt(model.node_masses[static_cast<std::size_t>(i)]);
    const Eigen::MatrixXd A = s.asDiagonal() * L * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("network eigensolve did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double network_lambda1(const NetworkModel& model)
{
    validate_network(model);
    if (!connected(model)) throw InvalidInput("network is disconnected");
    return network_spectrum(model)[1];
}

double network_rayleigh_quotient(const NetworkModel& model, const std::vector<double>& x)
{
    if (x.size() != model.node_count()) throw InvalidInput("test function size mismatch");
    double energy = 0, mass = 0;
    for (const auto& e : model.edges) {
        const double d = x[e.a] - x[e.b];
        energy += e.conductance * d * d;
    }
    for (std::size_t i = 0; i < x.size(); ++i) mass += model.node_masses[i] * x[i] * x[i];
    if (!(mass > 0)) throw InvalidInput("test function has zero mass");
    return energy / mass;
}

double rayleigh_upper_bound(const PantsSurface& surface, const Multicut& cut)
{
    const auto edges = surface.edges();
    std::vector<char> removed(edges.size(), 0);
    for (auto i : cut.edges) {
        if (i >= edges.size()) throw InvalidInput("cut references a missing edge");
        removed[i] = 1;
    }
    const auto comps = dual_components(surface, removed);
    if (comps.count != 2) {
        throw InvalidInput(
            "rayleigh_upper_bound needs a cut into exactly 2 components, got " +
            std::to_string(comps.count));
    }
    double m[2] = {0, 0};
    for (auto c : comps.component_of) m[c] += 2.0 * std::numbers::pi;

    double conductance = 0;
    for (auto i : cut.edges) {
        const auto& e = edges[i];
        if (comps.component_of[e.a] == comps.component_of[e.b]) continue;
        double w = modified_half_width(e.length);
        if (w <= 0) w = max_half_width(e.length);
        conductance += collar_conductance(e.length, w);
    }
    // +A on side 0, -B on side 1 with A m0 = B m1; the quotient is scale-free
    return conductance * (1.0 / m[0] + 1.0 / m[1]);
}

namespace
{

std::vector<double> shortest_paths(
    const std::vector<std::vector<std::pair<std::size_t, double>>>& adj, std::size_t src)
{
    std::vector<double> dist(adj.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (auto [u, len] : adj[v]) {
            if (d + len < dist[u]) {
                dist[u] = d + len;
                pq.push({dist[u], u});
            }
        }
    }
    return dist;
}

std::size_t farthest(const std::vector<double>& dist)
{
    return static_cast<std::size_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

double ramp_upper_bound(const NetworkModel& model)
{
    validate_network(model);
    if (!connected(model)) throw InvalidInput("network is disconnected");

    std::map<std::pair<std::size_t, std::size_t>, double> merged;
    for (const auto& e : model.edges) {
        if (e.a == e.b) continue;
        merged[std::minmax(e.a, e.b)] += e.conductance;
    }
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(model.node_count());
    for (const auto& [key, c] : merged) {
        adj[key.first].push_back({key.second, 1.0 / c});
        adj[key.second].push_back({key.first, 1.0 / c});
    }

    const auto start = farthest(shortest_paths(adj, 0));
    auto x = shortest_paths(adj, start);
    double mean = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mean += model.node_masses[i] * x[i];
    mean /= model.total_mass();
    for (auto& v : x) v -= mean;
    return network_rayleigh_quotient(model, x);
}

}  // namespace hypspec
