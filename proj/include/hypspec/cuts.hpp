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
#include <vector>

#include "hypspec/surface.hpp"

namespace hypspec
{

/**
 * @brief A set of pants curves whose removal disconnects the dual graph
 *
 * Only pants curves are considered, so minima over multicuts are upper
 * bounds for the true separating lengths.
 */
struct Multicut {
    std::vector<std::size_t> edges;  // ascending (= label order)
    std::vector<std::string> labels;
    double total_length{0};
    std::size_t component_count{0};
};

enum class CutSearch { automatic, exhaustive, branch_and_bound };

/// Largest edge count searched exhaustively under CutSearch::automatic.
inline constexpr std::size_t kAutoExhaustiveEdges = 20;
/// Hard limit for an explicitly requested exhaustive search.
inline constexpr std::size_t kMaxExhaustiveEdges = 24;

/// Builds a Multicut for an explicit edge set (any order, no duplicates).
Multicut make_multicut(const PantsSurface& surface, std::vector<std::size_t> edges);

/**
 * @brief Shortest set of pants curves cutting the surface into ≥ i+1 pieces
 *
 * Ties within 1e-12 relative are broken by the lexicographically smallest
 * label set, so exhaustive and branch-and-bound agree exactly.
 */
Multicut min_separating_length(
    const PantsSurface& surface, int pieces_minus_one, CutSearch search = CutSearch::automatic);

/// 78·i·(g-1).
double bers_upper_bound(int i, int genus);

/// All boundary curves of the picked pants (shared ones included).
Multicut pants_block_cut(const PantsSurface& surface, std::span<const std::size_t> picked);

/// Picks the first i pants in breadth-first order from vertex 0.
Multicut pants_block_cut(const PantsSurface& surface, int i);

}  // namespace hypspec
