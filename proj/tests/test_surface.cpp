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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "hypspec/error.hpp"
#include "hypspec/surface.hpp"

using namespace hypspec;

namespace
{

SurfaceDescription theta_graph(double a, double b, double c)
{
    return {2, {"X", "Y"}, {{"X", "Y", a, 0, "e1"}, {"X", "Y", b, 0, "e2"}, {"X", "Y", c, 0, "e3"}}};
}

bool has_message(const SurfaceValidationError& e, const std::string& needle)
{
    const auto& v = e.violations();
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

std::vector<std::string> violations_of(const SurfaceDescription& d)
{
    try {
        build_from_description(d);
    } catch (const SurfaceValidationError& e) {
        return e.violations();
    }
    return {};
}

// plain BFS labelling, independent of the union-find in the library
std::size_t bfs_component_count(const PantsSurface& s, const std::vector<char>& removed)
{
    std::vector<std::vector<std::size_t>> adj(s.vertex_count());
    for (std::size_t i = 0; i < s.edge_count(); ++i) {
        if (removed[i]) continue;
        adj[s.edges()[i].a].push_back(s.edges()[i].b);
        adj[s.edges()[i].b].push_back(s.edges()[i].a);
    }
    std::vector<char> seen(s.vertex_count(), 0);
    std::size_t count = 0;
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
        if (seen[v]) continue;
        ++count;
        std::vector<std::size_t> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("chain family counts")
{
    const auto s2 = build_chain_family({2, 0.1, {}});
    CHECK(s2.vertex_count() == 2);
    CHECK(s2.edge_count() == 3);
    for (const auto& e : s2.edges()) CHECK(e.length == 0.1);

    const auto s10 = build_chain_family({10, 0.1, {}});
    CHECK(s10.vertex_count() == 18);
    CHECK(s10.edge_count() == 27);
    std::vector<int> degree(18, 0);
    for (const auto& e : s10.edges()) {
        ++degree[e.a];
        ++degree[e.b];
    }
    CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }));
    CHECK(dual_components(s10).count == 1);

    CHECK_NOTHROW(build_chain_family({4, 1.0, {}}));
    CHECK(kTwoArcsinhOne == doctest::Approx(2.0 * std::asinh(1.0)).epsilon(1e-15));
}

TEST_CASE("chain family validates for every genus up to 64")
{
    for (int g = 2; g <= 64; ++g) {
        const auto s = build_chain_family({g, 0.09, {}});
        CHECK(validate(s.describe()).empty());
        CHECK(s.edge_count() == static_cast<std::size_t>(3 * (g - 1)));
    }
}

TEST_CASE("chain family rejects bad parameters")
{
    CHECK_THROWS_AS(build_chain_family({1, 0.1, {}}), InvalidInput);
    CHECK_THROWS_AS(build_chain_family({3, 0.0, {}}), InvalidInput);
    CHECK_THROWS_AS(build_chain_family({3, 1.8, {}}), InvalidInput);
    CHECK_THROWS_AS(build_chain_family({3, 0.1, {0.0, 1.0}}), InvalidInput);
}

TEST_CASE("edges are sorted by label and round-trip through describe")
{
    const auto s = build_chain_family({5, 0.2, {}});
    for (std::size_t i = 1; i < s.edge_count(); ++i) CHECK(s.edges()[i - 1].label < s.edges()[i].label);
    const auto again = build_from_description(s.describe());
    CHECK(again.describe().edges.size() == s.edge_count());
    for (std::size_t i = 0; i < s.edge_count(); ++i) {
        CHECK(again.edges()[i].label == s.edges()[i].label);
        CHECK(again.edges()[i].a == s.edges()[i].a);
        CHECK(again.edges()[i].b == s.edges()[i].b);
    }
    CHECK(s.edge_index("c01") < s.edge_count());
    CHECK_THROWS_AS(s.edge_index("nope"), InvalidInput);
    CHECK_THROWS_AS(s.vertex_index("nope"), InvalidInput);
}

TEST_CASE("validation reports each violated invariant")
{
    CHECK(violations_of(theta_graph(1, 1, 1)).empty());

    SUBCASE("degree 2 vertex")
    {
        SurfaceDescription d{2, {"X", "Y"}, {{"X", "Y", 1, 0, "e1"}, {"X", "Y", 1, 0, "e2"}, {"X", "X", 1, 0, "e3"}}};
        try {
            build_from_description(d);
            FAIL("expected a validation error");
        } catch (const SurfaceValidationError& e) {
            CHECK(has_message(e, "vertex degree != 3"));
        }
    }
    SUBCASE("edge count")
    {
        auto d = theta_graph(1, 1, 1);
        d.edges.push_back({"X", "Y", 1, 0, "e4"});
        try {
            build_from_description(d);
            FAIL("expected a validation error");
        } catch (const SurfaceValidationError& e) {
            CHECK(has_message(e, "edge count != 3(g-1)"));
        }
    }
    SUBCASE("bad lengths")
    {
        auto v = violations_of(theta_graph(1, -1, std::nan("")));
        CHECK(std::count_if(v.begin(), v.end(), [](const std::string& s) {
                  return s.find("non-positive or non-finite length") != std::string::npos;
              }) == 2);
    }
    SUBCASE("disconnected")
    {
        // two theta graphs declared as one genus-3 surface
        SurfaceDescription d{3, {"A", "B", "C", "D"}, {}};
        for (int k = 0; k < 3; ++k) {
            d.edges.push_back({"A", "B", 1, 0, "a" + std::to_string(k)});
            d.edges.push_back({"C", "D", 1, 0, "c" + std::to_string(k)});
        }
        auto v = violations_of(d);
        CHECK(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("disconnected") == 0; }));
    }
    SUBCASE("duplicates and unknown vertices")
    {
        auto d = theta_graph(1, 1, 1);
        d.edges[1].label = "e1";
        d.edges[2].b = "Z";
        auto v = violations_of(d);
        CHECK(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("duplicate edge label") == 0; }));
        CHECK(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("unknown vertex") != std::string::npos; }));
    }
    SUBCASE("genus")
    {
        SurfaceDescription d{1, {}, {}};
        auto v = violations_of(d);
        CHECK(std::any_of(v.begin(), v.end(), [](const std::string& s) { return s.find("genus must be >= 2") == 0; }));
    }
}

TEST_CASE("total volume depends on genus only")
{
    const auto s2 = build_from_description(theta_graph(0.3, 0.2, 0.5));
    CHECK(total_volume(s2) == doctest::Approx(4 * std::numbers::pi).epsilon(1e-15));
    CHECK(total_volume(s2) == doctest::Approx(12.56637).epsilon(1e-6));
    const double twists[] = {0.3, -1.0, 7.0};
    const double lengths[] = {1.5, 0.01, 0.2};
    CHECK(total_volume(s2.with_lengths(lengths)) == total_volume(s2));
    CHECK(total_volume(s2.with_twists(twists)) == total_volume(s2));
    CHECK(total_volume(build_chain_family({10, 0.1, {}})) == doctest::Approx(113.09734).epsilon(1e-7));
}

TEST_CASE("systole on pants curves")
{
    auto a = systole_on_pants_curves(build_chain_family({10, 0.1, {}}));
    CHECK(a.value == 0.1);
    CHECK(a.exact);
    CHECK_FALSE(a.near_threshold);

    auto b = systole_on_pants_curves(build_from_description(theta_graph(0.3, 0.2, 0.5)));
    CHECK(b.value == 0.2);
    CHECK(b.label == "e2");

    auto c = systole_on_pants_curves(build_chain_family({4, 1.7, {}}));
    CHECK(c.value == 1.7);
    CHECK(c.near_threshold);
    CHECK(c.caveat == "caveat: near 2 arcsinh 1 threshold");

    auto d = systole_on_pants_curves(build_from_description(theta_graph(0.3, 2.0, 0.5)));
    CHECK_FALSE(d.exact);
}

TEST_CASE("dual components agree with a BFS oracle on random removals")
{
    std::mt19937_64 rng(7);
    for (int g : {2, 3, 5, 8}) {
        const auto s = build_chain_family({g, 0.1, {}});
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<char> removed(s.edge_count());
            for (auto& r : removed) r = static_cast<char>(rng() % 3 == 0);
            const auto dc = dual_components(s, removed);
            CHECK(dc.count == bfs_component_count(s, removed));
            // ids start at 0 on vertex 0 and appear in first-vertex order
            CHECK(dc.component_of[0] == 0);
            std::size_t seen_max = 0;
            for (auto c : dc.component_of) {
                CHECK(c <= seen_max + 1);
                seen_max = std::max(seen_max, c);
            }
        }
    }
}

TEST_CASE("central rung-pair cut disconnects the chain")
{
    const auto s = build_chain_family({6, 0.1, {}});
    std::vector<char> removed(s.edge_count(), 0);
    removed[s.edge_index("r02a")] = 1;
    removed[s.edge_index("r02b")] = 1;
    // a block's two rungs are the only link between its two pants
    CHECK(dual_components(s, removed).count == 2);
}
