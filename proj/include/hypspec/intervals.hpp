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
#include <vector>

namespace hypspec
{

struct Interval {
    double lo{0};
    double hi{0};
    double length() const noexcept { return hi - lo; }
};

/// Distance between two closed intervals (0 when they meet).
double interval_distance(Interval x, Interval y) noexcept;

/**
 * @brief Ordered intervals a₁ ≤ b₁ ≤ a₂ ≤ … ≤ bₙ with nonnegative pair weights
 *
 * Weights are read from the strict upper triangle of a row-major n×n matrix;
 * the diagonal and lower triangle are ignored.
 */
class IntervalSystem
{
public:
    IntervalSystem(std::vector<Interval> intervals, std::vector<double> weights);

    std::size_t size() const noexcept { return intervals_.size(); }
    std::span<const Interval> intervals() const noexcept { return intervals_; }
    double weight(std::size_t i, std::size_t j) const noexcept
    {
        return i < j ? weights_[i * size() + j] : weights_[j * size() + i];
    }
    const std::vector<double>& weight_matrix() const noexcept { return weights_; }

    /// Σ (bᵢ - aᵢ).
    double total_length() const noexcept;
    /// bₙ - a₁ - Σ (bᵢ - aᵢ): the uncovered part of the hull.
    double uncovered_length() const noexcept;
    /// Σ over i < K₀ ≤ j (0-based) of the weights straddling the cut.
    double cut_weight(std::size_t k0) const;

private:
    std::vector<Interval> intervals_;
    std::vector<double> weights_;
};

/// Σ_{i<j} αᵢⱼ dist(Iᵢ, Iⱼ).
double weighted_gap_sum(const IntervalSystem& sys);

struct CutIndexTrace {
    /// Number of intervals left of the cut, in [1, n-1].
    std::size_t k0{1};
    /// Functional before the first collapse, then after each collapse and
    /// after each merge, alternating.
    std::vector<double> functional;
    /// True for each round that collapsed interval 2 onto interval 1.
    std::vector<bool> collapsed_left;
};

/**
 * @brief Cut index produced by repeatedly collapsing the second interval
 *
 * Each round shifts interval 2 to whichever end of its free range gives the
 * smaller functional (ties go left), merges it with the neighbour it
 * touches, and sums the merged weights. At two blocks the cut is forced.
 */
std::size_t find_cut_index(const IntervalSystem& sys);
CutIndexTrace find_cut_index_traced(const IntervalSystem& sys);

struct CutInequality {
    bool holds{false};
    /// Uncovered length ≤ 0, so the right-hand side cannot be positive.
    bool vacuous{false};
    double lhs{0};
    double rhs{0};
};

/// Checks Σ αᵢⱼ dist(Iᵢ, Iⱼ) ≥ uncovered_length · cut_weight(K₀).
CutInequality verify_cut_inequality(const IntervalSystem& sys, std::size_t k0);

struct MergedIntervals {
    std::vector<Interval> blocks;         // sorted, pairwise disjoint
    std::vector<std::size_t> assignment;  // input index -> block index
};

/// Merges overlapping or touching intervals (inputs in any order).
MergedIntervals merge_to_disjoint(std::span<const Interval> raw);

/// Distance between the blocks holding inputs i and j.
double reduced_gap(const MergedIntervals& merged, std::size_t i, std::size_t j);

}  // namespace hypspec
