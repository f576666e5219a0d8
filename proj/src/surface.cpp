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

#include "hypspec/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hypspec/error.hpp"

namespace hypspec
{
namespace
{

class UnionFind
{
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            // smaller root wins so component ids are stable
            if (b < a) std::swap(a, b);
            parent_[b] = a;
        }
    }

private:
    std::vector<std::size_t> parent_;
};

std::string padded(std::size_t value, std::size_t width)
{
    auto s = std::to_string(value);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

std::size_t digits(std::size_t n)
{
    std::size_t d = 1;
    while (n >= 10) {
        n /= 10;
        ++d;
    }
    return d;
}

}  // namespace

std::size_t PantsSurface::vertex_index(std::string_view name) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) {
        throw InvalidInput("unknown vertex '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t PantsSurface::edge_index(std::string_view label) const
{
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), label,
        [](const Edge& e, std::string_view l) { return e.label < l; });
    if (it == edges_.end() || it->label != label) {
        throw InvalidInput("unknown edge '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

SurfaceDescription PantsSurface::describe() const
{
    SurfaceDescription d;
    d.genus = genus_;
    d.vertices = vertices_;
    d.edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        d.edges.push_back({vertices_[e.a], vertices_[e.b], e.length, e.twist, e.label});
    }
    return d;
}

PantsSurface PantsSurface::with_lengths(std::span<const double> lengths) const
{
    if (lengths.size() != edges_.size()) {
        throw InvalidInput("with_lengths: expected one length per edge");
    }
    auto d = describe();
    for (std::size_t i = 0; i < lengths.size(); ++i) d.edges[i].length = lengths[i];
    return build_from_description(d);
}

PantsSurface PantsSurface::with_twists(std::span<const double> twists) const
{
    if (twists.size() != edges_.size()) {
        throw InvalidInput("with_twists: expected one twist per edge");
    }
    auto d = describe();
    for (std::size_t i = 0; i < twists.size(); ++i) d.edges[i].twist = twists[i];
    return build_from_description(d);
}

std::vector<std::string> validate(const SurfaceDescription& desc)
{
    std::vector<std::string> out;
    const int g = desc.genus;
    if (g < 2) {
        out.push_back("genus must be >= 2, got " + std::to_string(g));
    }

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < desc.vertices.size(); ++i) {
        if (!index.emplace(desc.vertices[i], i).second) {
            out.push_back("duplicate vertex '" + desc.vertices[i] + "'");
        }
    }

    if (g >= 2) {
        const auto want_v = static_cast<std::size_t>(2 * (g - 1));
        const auto want_e = static_cast<std::size_t>(3 * (g - 1));
        if (desc.vertices.size() != want_v) {
            out.push_back(
                "vertex count != 2(g-1): declared genus " + std::to_string(g) + " needs " +
                std::to_string(want_v) + ", got " + std::to_string(desc.vertices.size()));
        }
        if (desc.edges.size() != want_e) {
            out.push_back(
                "edge count != 3(g-1): declared genus " + std::to_string(g) + " needs " +
                std::to_string(want_e) + ", got " + std::to_string(desc.edges.size()));
        }
    }

    std::vector<int> degree(desc.vertices.size(), 0);
    std::map<std::string, int> labels;
    UnionFind uf(desc.vertices.size());
    for (const auto& e : desc.edges) {
        if (++labels[e.label] == 2) {
            out.push_back("duplicate edge label '" + e.label + "'");
        }
        if (!std::isfinite(e.length) || e.length <= 0) {
            std::ostringstream os;
            os << "non-positive or non-finite length " << e.length << " on edge '" << e.label
               << "'";
            out.push_back(os.str());
        }
        if (!std::isfinite(e.twist)) {
            out.push_back("non-finite twist on edge '" + e.label + "'");
        }
        auto ia = index.find(e.a);
        auto ib = index.find(e.b);
        if (ia == index.end()) out.push_back("edge '" + e.label + "' references unknown vertex '" + e.a + "'");
        if (ib == index.end()) out.push_back("edge '" + e.label + "' references unknown vertex '" + e.b + "'");
        if (ia != index.end() && ib != index.end()) {
            ++degree[ia->second];
            ++degree[ib->second];
            uf.unite(ia->second, ib->second);
        }
    }

    for (std::size_t i = 0; i < degree.size(); ++i) {
        if (degree[i] != 3) {
            out.push_back(
                "vertex degree != 3: vertex '" + desc.vertices[i] + "' has degree " +
                std::to_string(degree[i]));
        }
    }

    if (!desc.vertices.empty()) {
        std::size_t roots = 0;
        for (std::size_t i = 0; i < desc.vertices.size(); ++i) {
            if (uf.find(i) == i) ++roots;
        }
        if (roots != 1) {
            out.push_back("disconnected: dual graph has " + std::to_string(roots) + " components");
        }
    } else {
        out.push_back("no vertices");
    }
    return out;
}

PantsSurface build_from_description(const SurfaceDescription& desc)
{
    auto violations = validate(desc);
    if (!violations.empty()) {
        throw SurfaceValidationError(std::move(violations));
    }

    PantsSurface s;
    s.genus_ = desc.genus;
    s.vertices_ = desc.vertices;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < desc.vertices.size(); ++i) index[desc.vertices[i]] = i;
    s.edges_.reserve(desc.edges.size());
    for (const auto& e : desc.edges) {
        s.edges_.push_back({index[e.a], index[e.b], e.length, e.twist, e.label});
    }
    std::sort(s.edges_.begin(), s.edges_.end(), [](const Edge& x, const Edge& y) {
        return x.label < y.label;
    });
    return s;
}

PantsSurface build_chain_family(const ChainFamilyParams& params)
{
    const int g = params.genus;
    const double ell = params.core_length;
    if (g < 2) {
        throw InvalidInput("chain family needs genus >= 2, got " + std::to_string(g));
    }
    if (!(ell > 0) || !(ell < kTwoArcsinhOne)) {
        std::ostringstream os;
        os << "chain family core length must lie in (0, 2 arcsinh 1 = " << kTwoArcsinhOne
           << "), got " << ell;
        throw InvalidInput(os.str());
    }
    const auto n_edges = static_cast<std::size_t>(3 * (g - 1));
    if (!params.twists.empty() && params.twists.size() != n_edges) {
        throw InvalidInput("chain family twists: expected " + std::to_string(n_edges) + " values");
    }

    const auto n_vertices = static_cast<std::size_t>(2 * (g - 1));
    const auto vw = digits(n_vertices - 1);
    const auto cw = std::max<std::size_t>(2, digits(static_cast<std::size_t>(g)));

    SurfaceDescription d;
    d.genus = g;
    for (std::size_t i = 0; i < n_vertices; ++i) d.vertices.push_back("P" + padded(i, vw));

    const auto& v = d.vertices;
    d.edges.push_back({v.front(), v.front(), ell, 0, "h_left"});
    d.edges.push_back({v.back(), v.back(), ell, 0, "h_right"});
    // Vertex 2k-1, 2k form interior block k (1..g-2); vertex 0 and the last
    // vertex are the end handles.
    const auto blocks = static_cast<std::size_t>(g - 2);
    for (std::size_t k = 1; k <= blocks; ++k) {
        const auto& left = v[2 * k - 1];
        const auto& right = v[2 * k];
        d.edges.push_back({left, right, ell, 0, "r" + padded(k, cw) + "a"});
        d.edges.push_back({left, right, ell, 0, "r" + padded(k, cw) + "b"});
    }
    // chain curve j joins vertex 2j-2 to vertex 2j-1
    for (std::size_t j = 1; j <= static_cast<std::size_t>(g - 1); ++j) {
        d.edges.push_back({v[2 * j - 2], v[2 * j - 1], ell, 0, "c" + padded(j, cw)});
    }

    auto surface = build_from_description(d);
    if (!params.twists.empty()) return surface.with_twists(params.twists);
    return surface;
}

double total_volume(const PantsSurface& surface) noexcept
{
    return 4.0 * std::numbers::pi * static_cast<double>(surface.genus() - 1);
}

SystoleEstimate systole_on_pants_curves(const PantsSurface& surface)
{
    SystoleEstimate out;
    const auto edges = surface.edges();
    auto it = std::min_element(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.length < b.length;
    });
    out.value = it->length;
    out.label = it->label;
    double longest = 0;
    for (const auto& e : edges) longest = std::max(longest, e.length);
    out.exact = longest < kTwoArcsinhOne;
    out.near_threshold = longest >= 0.95 * kTwoArcsinhOne;
    if (!out.exact) {
        out.caveat = "some pants curve has length >= 2 arcsinh 1; value is only an upper bound on the systole";
    } else if (out.near_threshold) {
        out.caveat = "caveat: near 2 arcsinh 1 threshold";
    }
    return out;
}

DualComponents dual_components(const PantsSurface& surface, std::span<const char> removed)
{
    UnionFind uf(surface.vertex_count());
    const auto edges = surface.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!removed.empty() && removed[i]) continue;
        uf.unite(edges[i].a, edges[i].b);
    }
    DualComponents out;
    out.component_of.assign(surface.vertex_count(), 0);
    std::vector<std::size_t> id(surface.vertex_count(), SIZE_MAX);
    for (std::size_t v = 0; v < surface.vertex_count(); ++v) {
        auto r = uf.find(v);
        if (id[r] == SIZE_MAX) id[r] = out.count++;
        out.component_of[v] = id[r];
    }
    return out;
}

}  // namespace hypspec
