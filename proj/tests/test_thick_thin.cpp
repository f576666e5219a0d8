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

#include "hypspec/error.hpp"
#include "hypspec/thick_thin.hpp"

using namespace hypspec;
using doctest::Approx;

TEST_CASE("admissibility of the default epsilon")
{
    const auto c = epsilon_admissible(0.05);
    CHECK(c.width_condition);
    CHECK(c.volume_condition);
    CHECK(c.injectivity_condition);
    CHECK(c.admissible());
    CHECK(c.failures().empty());
    CHECK(c.collar_volume_min >= 0.5);
    CHECK(c.shell_volume_max <= 4.0);
}

TEST_CASE("injectivity ceiling")
{
    CHECK(injectivity_epsilon_ceiling() == Approx(0.5 / std::exp(2.0)).epsilon(1e-15));
    CHECK(std::abs(injectivity_epsilon_ceiling() - 0.067668) < 1e-6);

    const auto c = epsilon_admissible(0.3);
    CHECK_FALSE(c.injectivity_condition);
    CHECK_FALSE(c.admissible());

    const auto m = epsilon_admissible(0.067);
    CHECK(m.injectivity_condition);
    CHECK(m.width_condition);
    CHECK(m.width_value == Approx(std::asinh(1 / std::sinh(0.067)) - 2).epsilon(1e-12));
    CHECK(std::abs(m.width_value - 1.398) < 2e-3);
}

TEST_CASE("illegal epsilon")
{
    CHECK_THROWS_AS(epsilon_admissible(0.0), InvalidInput);
    CHECK_THROWS_AS(epsilon_admissible(-0.1), InvalidInput);
    CHECK_THROWS_AS(epsilon_admissible(std::nan("")), InvalidInput);
}

TEST_CASE("thin threshold is strict")
{
    const auto t = decompose(build_chain_family({10, 0.1, {}}), 0.05);
    CHECK(t.thin_collars.empty());
    CHECK(t.thick_components.size() == 1);
}

TEST_CASE("all-thin chain")
{
    const auto s = build_chain_family({10, 0.09, {}});
    const auto t = decompose(s, 0.05);
    CHECK(t.thin_collars.size() == 27);
    CHECK(t.thick_components.size() == 18);
    for (std::size_t v = 0; v < s.vertex_count(); ++v) CHECK(t.component_of[v] == v);
    for (const auto& tc : t.thin_collars) {
        CHECK(tc.collar.has_shell());
        CHECK(tc.collar.half_width() == Approx(modified_half_width(0.09)));
        CHECK(tc.label == s.edges()[tc.edge].label);
    }
}

TEST_CASE("mixed lengths")
{
    const auto base = build_chain_family({4, 1.0, {}});
    std::vector<double> lengths(base.edge_count(), 1.0);

    SUBCASE("shortened bridge splits")
    {
        lengths[base.edge_index("c02")] = 0.05;
        const auto s = base.with_lengths(lengths);
        const auto t = decompose(s, 0.05);
        REQUIRE(t.thin_collars.size() == 1);
        CHECK(t.thin_collars[0].label == "c02");
        // oracle: components of the dual graph minus that edge
        std::vector<char> removed(s.edge_count(), 0);
        removed[s.edge_index("c02")] = 1;
        const auto dc = dual_components(s, removed);
        CHECK(t.thick_components.size() == dc.count);
        CHECK(t.component_of == dc.component_of);
    }
    SUBCASE("shortened rung does not split")
    {
        lengths[base.edge_index("r01a")] = 0.05;
        const auto t = decompose(base.with_lengths(lengths), 0.05);
        CHECK(t.thin_collars.size() == 1);
        CHECK(t.thick_components.size() == 1);
    }
}

TEST_CASE("inadmissible epsilon")
{
    const auto s = build_chain_family({3, 0.09, {}});
    try {
        decompose(s, 0.3);
        FAIL("expected InadmissibleEpsilon");
    } catch (const InadmissibleEpsilon& e) {
        REQUIRE_FALSE(e.failed_conditions().empty());
        bool names_injectivity = false;
        for (const auto& f : e.failed_conditions()) names_injectivity |= f.rfind("injectivity", 0) == 0;
        CHECK(names_injectivity);
    }
    const auto forced = decompose(s, 0.3, true);
    CHECK(forced.forced);
    CHECK_FALSE(decompose(s, 0.05).forced);
}
