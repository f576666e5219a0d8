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

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hypspec/collar.hpp"
#include "hypspec/error.hpp"
#include "hypspec/grid_function.hpp"

using namespace hypspec;
using doctest::Approx;

namespace
{

constexpr double kPi = std::numbers::pi;

CollarGridFunction sampled(double ell, double w, std::size_t nr, std::size_t nt,
                           double (*f)(double, double))
{
    auto g = CollarGridFunction::uniform(ell, w, nr, nt);
    g.sample(f);
    return g;
}

double linear_rho(double rho, double) { return rho; }
double angular(double, double t) { return std::sin(2 * kPi * t); }
double one(double, double) { return 1.0; }
double mixed(double rho, double t) { return std::cos(rho) * std::cos(2 * kPi * t) + 0.3 * rho * std::sin(4 * kPi * t); }

}  // namespace

TEST_CASE("constant functions")
{
    const auto g = sampled(0.1, 2.0, 65, 16, one);
    CHECK(dirichlet_energy(g) == 0.0);
    CHECK(l2_norm_sq(g) == Approx(collar_volume(0.1, 2.0)).epsilon(1e-3));
    auto z = g;
    z.at(10, 3) += 1e-3;
    CHECK(dirichlet_energy(z) > 0.0);
}

TEST_CASE("closed-form energies")
{
    // ∫∫ 1 · ℓ cosh ρ = 2ℓ sinh w
    const double ell = 0.1;
    const double w = 2.0;
    CHECK(dirichlet_energy(sampled(ell, w, 2049, 4, linear_rho)) == Approx(2 * ell * std::sinh(w)).epsilon(1e-6));
    // ∫∫ (2π cos 2πt)² / (ℓ cosh ρ) = 4π² gd(w) / ℓ
    const double want = 4 * kPi * kPi * gudermannian(1.0) / ell;
    CHECK(dirichlet_energy(sampled(ell, 1.0, 1025, 4096, angular)) == Approx(want).epsilon(1e-6));
}

TEST_CASE("quadrature converges at second order")
{
    const double ell = 0.1;
    auto ratio = [](double e1, double e2) { return e1 / e2; };

    const double w = 2.0;
    const double want_lin = 2 * ell * std::sinh(w);
    const double a = std::abs(dirichlet_energy(sampled(ell, w, 33, 4, linear_rho)) - want_lin);
    const double b = std::abs(dirichlet_energy(sampled(ell, w, 65, 4, linear_rho)) - want_lin);
    CHECK(ratio(a, b) == Approx(4.0).epsilon(0.05));

    const double want_ang = 4 * kPi * kPi * gudermannian(1.0) / ell;
    const double c = std::abs(dirichlet_energy(sampled(ell, 1.0, 33, 32, angular)) - want_ang);
    const double d = std::abs(dirichlet_energy(sampled(ell, 1.0, 65, 64, angular)) - want_ang);
    CHECK(ratio(c, d) == Approx(4.0).epsilon(0.05));

    const double want_mass = 2 * ell * std::sinh(w);
    const double e = std::abs(l2_norm_sq(sampled(ell, w, 33, 4, one)) - want_mass);
    const double f = std::abs(l2_norm_sq(sampled(ell, w, 65, 4, one)) - want_mass);
    CHECK(ratio(e, f) == Approx(4.0).epsilon(0.05));
}

TEST_CASE("region integrals add up")
{
    auto g = CollarGridFunction::with_shell(0.08, modified_half_width(0.08), 64, 16, 16);
    g.sample(mixed);
    const double w = modified_half_width(0.08);
    const RhoRange parts[] = {{-w - 1, -w}, {-w, w}, {w, w + 1}};
    double e = 0, m = 0;
    for (auto p : parts) {
        e += dirichlet_energy(g, p);
        m += l2_norm_sq(g, p);
    }
    CHECK(e == Approx(dirichlet_energy(g)).epsilon(1e-13));
    CHECK(m == Approx(l2_norm_sq(g)).epsilon(1e-13));
}

TEST_CASE("energy gradient matches finite differences")
{
    auto g = CollarGridFunction::with_shell(0.1, 1.2, 12, 4, 8);
    g.sample(mixed);
    const auto grad = dirichlet_energy_gradient(g);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 60; ++k) {
        const auto idx = static_cast<std::size_t>(rng() % g.values().size());
        auto p = g, q = g;
        const double h = 1e-5;
        p.values()[idx] += h;
        q.values()[idx] -= h;
        const double fd = (dirichlet_energy(p) - dirichlet_energy(q)) / (2 * h);
        CHECK(grad[idx] == Approx(fd).epsilon(1e-6).scale(1e-6 * std::abs(grad[idx]) + 1e-8));
    }
    // quadratic form: E(f) = ½ f·∇E(f)
    double half = 0;
    for (std::size_t i = 0; i < grad.size(); ++i) half += 0.5 * grad[i] * g.values()[i];
    CHECK(half == Approx(dirichlet_energy(g)).epsilon(1e-11));
}

TEST_CASE("crossing energy")
{
    const double ell = 0.1;
    auto g = CollarGridFunction::uniform(ell, 2.0, 257, 16);
    g.sample([](double rho, double) { return (rho > 0 ? 1.0 : -1.0) * std::min(std::abs(rho), 1.0); });
    const auto c = crossing_energy_check(g);
    CHECK(c.jump == Approx(2.0));
    CHECK(c.bound == Approx(ell));
    CHECK(c.energy >= ell);
    CHECK(c.pass);

    const auto k = crossing_energy_check(sampled(ell, 2.0, 33, 8, one));
    CHECK(k.jump == 0.0);
    CHECK(k.bound == 0.0);
    CHECK(k.pass);
}

TEST_CASE("cutoff extension explicit construction")
{
    const double ell = 0.09;
    const double w = modified_half_width(ell);
    auto g = CollarGridFunction::with_shell(ell, w, 256, 64, 8);
    g.sample([w](double rho, double) {
        const double a = std::abs(rho);
        return a <= w - 1 ? 1.0 : a <= w ? w - a : 0.0;
    });
    const double c = l2_norm_sq(g, {-w, w});
    const auto r = cutoff_extension_check(g, w, 1.0 / 64.0, c);
    CHECK(r.intermediate_pass);
    CHECK(r.final_pass);
    CHECK(r.collar_energy >= r.final_bound);
    CHECK(r.final_bound == Approx((1 - 16.0 / 64.0) * c / 4));
    CHECK(r.cutoff_mass == Approx(c).epsilon(1e-12));
}

TEST_CASE("cutoff extension rejects unmet hypotheses")
{
    const double ell = 0.09;
    const double w = modified_half_width(ell);
    auto g = CollarGridFunction::with_shell(ell, w, 128, 32, 8);

    // f stays 1 across the shell, so the shell mass is far above δc
    g.sample(one);
    const double c = l2_norm_sq(g, {-w, w});
    try {
        cutoff_extension_check(g, w, 1.0 / 64.0, c);
        FAIL("expected a hypothesis violation");
    } catch (const HypothesisViolation& e) {
        CHECK(std::string(e.what()).rfind("hypothesis 2", 0) == 0);
    }

    // small but fast oscillation in the shell: large shell energy only
    // continuous at the collar boundary, tapering to 0 there
    g.sample([w](double rho, double) {
        const double r = std::abs(rho);
        if (r <= w - 1) return 1.0;
        if (r <= w) return w - r;
        return 0.02 * std::sin(40 * (r - w));
    });
    try {
        cutoff_extension_check(g, w, 1.0 / 64.0, l2_norm_sq(g, {-w, w}));
        FAIL("expected a hypothesis violation");
    } catch (const HypothesisViolation& e) {
        CHECK(std::string(e.what()).rfind("hypothesis 3", 0) == 0);
    }

    CHECK_THROWS_AS(cutoff_extension_check(g, w, 0.1, c), HypothesisViolation);
    CHECK_THROWS_AS(cutoff_extension_check(g, w, 1.0 / 64.0, 10 * c), HypothesisViolation);
    auto plain = CollarGridFunction::uniform(ell, w, 65, 4);
    CHECK_THROWS_AS(cutoff_extension_check(plain, w, 1.0 / 64.0, c), InvalidInput);
}

TEST_CASE("grid construction errors")
{
    CHECK_THROWS_AS(CollarGridFunction(0.1, {0.0}, 4), InvalidInput);
    CHECK_THROWS_AS(CollarGridFunction(0.1, {0.0, 0.0}, 4), InvalidInput);
    CHECK_THROWS_AS(CollarGridFunction(0.0, {0.0, 1.0}, 4), InvalidInput);
    CHECK_THROWS_AS(CollarGridFunction(0.1, {0.0, 1.0}, 0), InvalidInput);
}
