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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypspec
{

/// 2·arcsinh(1): curves shorter than this cannot cross each other.
inline constexpr double kTwoArcsinhOne = 1.7627471740390860505;

/** @brief One pants curve: a gluing between two (possibly equal) pants */
struct Edge {
    std::size_t a{0};
    std::size_t b{0};
    double length{0};
    double twist{0};
    std::string label;

    bool is_loop() const noexcept { return a == b; }
};

struct EdgeDescription {
    std::string a;
    std::string b;
    double length{0};
    double twist{0};
    std::string label;
};

/** @brief Unvalidated surface description, as read from JSON */
struct SurfaceDescription {
    int genus{0};
    std::vector<std::string> vertices;
    std::vector<EdgeDescription> edges;
};

/**
 * @brief Closed hyperbolic surface given by a pants decomposition
 *
 * Vertices are pairs of pants, edges are the 3g-3 decomposition curves
 * carrying Fenchel-Nielsen length and twist. Edges are kept sorted by label.
 * Instances are immutable and always satisfy the pants invariants: every
 * vertex trivalent, 2g-2 vertices, 3g-3 edges, connected, finite positive
 * lengths.
 */
class PantsSurface
{
public:
    int genus() const noexcept { return genus_; }
    std::span<const std::string> vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Index of a vertex by name; throws InvalidInput if absent.
    std::size_t vertex_index(std::string_view name) const;
    /// Index of an edge by label; throws InvalidInput if absent.
    std::size_t edge_index(std::string_view label) const;

    /// Copy with edge lengths replaced (in edge order); revalidated.
    PantsSurface with_lengths(std::span<const double> lengths) const;
    /// Copy with twists replaced (in edge order).
    PantsSurface with_twists(std::span<const double> twists) const;

    SurfaceDescription describe() const;

private:
    friend PantsSurface build_from_description(const SurfaceDescription&);

    int genus_{0};
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

/// Every invariant violation in the description; empty when valid.
std::vector<std::string> validate(const SurfaceDescription& desc);

/// Validated surface; throws SurfaceValidationError listing all violations.
PantsSurface build_from_description(const SurfaceDescription& desc);

struct ChainFamilyParams {
    int genus{2};
    double core_length{0.1};
    /// Empty means all zero; otherwise one entry per curve in label order.
    std::vector<double> twists;
};

/**
 * @brief The chain surface built from 2g-2 equilateral pants
 *
 * Layout along the chain: an end pants closed by a self-gluing (handle), then
 * g-2 blocks of two pants sharing two "rung" curves, then the other end
 * handle. Consecutive blocks are joined by a single chain curve, so every
 * chain curve separates. All 3g-3 curves have length core_length.
 */
PantsSurface build_chain_family(const ChainFamilyParams& params);

/// Area 4π(g-1) by Gauss-Bonnet.
double total_volume(const PantsSurface& surface) noexcept;

struct SystoleEstimate {
    double value{0};
    std::string label;
    /// True when every curve is below 2 arcsinh 1, so no transverse
    /// geodesic can be shorter and the value is the true systole.
    bool exact{false};
    /// Some curve is within 5% of the 2 arcsinh 1 threshold.
    bool near_threshold{false};
    std::string caveat;
};

SystoleEstimate systole_on_pants_curves(const PantsSurface& surface);

/** @brief Connected components of the dual graph with some edges deleted */
struct DualComponents {
    std::vector<std::size_t> component_of;  // per vertex
    std::size_t count{0};
};

/// `removed` is a per-edge mask (nonzero = deleted); empty removes nothing.
DualComponents dual_components(
    const PantsSurface& surface, std::span<const char> removed = {});

}  // namespace hypspec
