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

#include "hypspec/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hypspec/error.hpp"

namespace hypspec
{

double interval_distance(Interval x, Interval y) noexcept
{
    return std::max({0.0, y.lo - x.hi, x.lo - y.hi});
}

IntervalSystem::IntervalSystem(std::vector<Interval> intervals, std::vector<double> weights)
    : intervals_{std::move(intervals)}, weights_{std::move(weights)}
{
    const auto n = intervals_.size();
    if (n == 0) throw InvalidInput("interval system must be non-empty");
    if (weights_.size() != n * n) {
        throw InvalidInput("interval system: weight matrix must be n x n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& I = intervals_[i];
        if (!std::isfinite(I.lo) || !std::isfinite(I.hi) || I.lo > I.hi) {
            throw InvalidInput("interval " + std::to_string(i) + " is not a finite [a, b] with a <= b");
        }
        if (i > 0 && intervals_[i - 1].hi > I.lo) {
            throw InvalidInput(
                "intervals out of order: b_" + std::to_string(i) + " > a_" + std::to_string(i + 1));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = weights_[i * n + j];
            if (!(w >= 0) || !std::isfinite(w)) {
                throw InvalidInput("interval system: weights must be finite and >= 0");
            }
        }
    }
}

double IntervalSystem::total_length() const noexcept
{
    double s = 0;
    for (const auto& I : intervals_) s += I.length();
    return s;
}

double IntervalSystem::uncovered_length() const noexcept
{
    return intervals_.back().hi - intervals_.front().lo - total_length();
}

double IntervalSystem::cut_weight(std::size_t k0) const
{
    const auto n = size();
    if (k0 < 1 || k0 >= n) throw InvalidInput("cut index must lie in [1, n-1]");
    double s = 0;
    for (std::size_t i = 0; i < k0; ++i) {
        for (std::size_t j = k0; j < n; ++j) s += weight(i, j);
    }
    return s;
}

double weighted_gap_sum(const IntervalSystem& sys)
{
    const auto I = sys.intervals();
    double s = 0;
    for (std::size_t i = 0; i < I.size(); ++i) {
        for (std::size_t j = i + 1; j < I.size(); ++j) {
            s += sys.weight(i, j) * interval_distance(I[i], I[j]);
        }
    }
    return s;
}

namespace
{

struct Working {
    std::vector<Interval> I;
    std::vector<double> w;               // n×n, upper triangle used
    std::vector<std::size_t> block_end;  // last original index per block
    std::size_t n() const { return I.size(); }
    double& at(std::size_t i, std::size_t j) { return w[i * n() + j]; }
    double at(std::size_t i, std::size_t j) const { return w[i * n() + j]; }

    double functional() const
    {
        double s = 0;
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = i + 1; j < n(); ++j) s += at(i, j) * interval_distance(I[i], I[j]);
        return s;
    }
};

// Removes block `gone` after its weights were folded into `keep`.
Working drop_block(const Working& src, std::size_t keep, std::size_t gone, Interval merged)
{
    const auto n = src.n();
    Working out;
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < n; ++i)
        if (i != gone) map.push_back(i);
    out.I.reserve(n - 1);
    for (auto i : map) out.I.push_back(i == keep ? merged : src.I[i]);
    out.w.assign((n - 1) * (n - 1), 0.0);
    auto sym = [&](std::size_t i, std::size_t j) { return i < j ? src.at(i, j) : src.at(j, i); };
    for (std::size_t a = 0; a < n - 1; ++a) {
        for (std::size_t b = a + 1; b < n - 1; ++b) {
            const auto i = map[a], j = map[b];
            double v = sym(i, j);
            if (i == keep && j != gone) v += sym(gone, j);
            if (j == keep && i != gone) v += sym(i, gone);
            out.w[a * (n - 1) + b] = v;
        }
    }
    const auto later = std::max(keep, gone);
    for (std::size_t a = 0; a < n - 1; ++a) {
        const auto i = map[a];
        out.block_end.push_back(i == std::min(keep, gone) ? src.block_end[later] : src.block_end[i]);
    }
    return out;
}

}  // namespace

CutIndexTrace find_cut_index_traced(const IntervalSystem& sys)
{
    if (sys.size() < 2) throw InvalidInput("find_cut_index needs at least two intervals");

    Working cur;
    cur.I.assign(sys.intervals().begin(), sys.intervals().end());
    cur.w = sys.weight_matrix();
    cur.block_end.resize(sys.size());
    std::iota(cur.block_end.begin(), cur.block_end.end(), 0);

    CutIndexTrace trace;
    trace.functional.push_back(cur.functional());

    while (cur.n() > 2) {
        const Interval a = cur.I[0], mid = cur.I[1], c = cur.I[2];
        const double len = mid.length();

        Working left = cur;
        left.I[1] = {a.hi, a.hi + len};
        Working right = cur;
        right.I[1] = {c.lo - len, c.lo};
        const double fl = left.functional();
        const double fr = right.functional();

        if (fl <= fr) {
            trace.functional.push_back(fl);
            trace.collapsed_left.push_back(true);
            cur = drop_block(left, 0, 1, {a.lo, a.hi + len});
        } else {
            trace.functional.push_back(fr);
            trace.collapsed_left.push_back(false);
            cur = drop_block(right, 1, 2, {c.lo - len, c.hi});
        }
        trace.functional.push_back(cur.functional());
    }
    trace.k0 = cur.block_end[0] + 1;
    return trace;
}

std::size_t find_cut_index(const IntervalSystem& sys)
{
    return find_cut_index_traced(sys).k0;
}

CutInequality verify_cut_inequality(const IntervalSystem& sys, std::size_t k0)
{
    CutInequality out;
    const double uncovered = sys.uncovered_length();
    out.lhs = weighted_gap_sum(sys);
    out.rhs = uncovered * sys.cut_weight(k0);
    out.vacuous = uncovered <= 0;

    const auto I = sys.intervals();
    double wsum = 0;
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j) wsum += sys.weight(i, j);
    const double scale =
        (std::abs(I.front().lo) + std::abs(I.back().hi) + sys.total_length()) * wsum;
    out.holds = out.vacuous || out.lhs >= out.rhs - 1e-12 * scale;
    return out;
}

MergedIntervals merge_to_disjoint(std::span<const Interval> raw)
{
    MergedIntervals out;
    out.assignment.assign(raw.size(), 0);
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return raw[x].lo < raw[y].lo;
    });
    for (auto idx : order) {
        const auto& I = raw[idx];
        if (I.lo > I.hi) throw InvalidInput("merge_to_disjoint: interval with lo > hi");
        if (out.blocks.empty() || I.lo > out.blocks.back().hi) {
            out.blocks.push_back(I);
        } else {
            out.blocks.back().hi = std::max(out.blocks.back().hi, I.hi);
        }
        out.assignment[idx] = out.blocks.size() - 1;
    }
    return out;
}

double reduced_gap(const MergedIntervals& merged, std::size_t i, std::size_t j)
{
    if (i >= merged.assignment.size() || j >= merged.assignment.size()) {
        throw InvalidInput("reduced_gap: index out of range");
    }
    return interval_distance(merged.blocks[merged.assignment[i]], merged.blocks[merged.assignment[j]]);
}

}  // namespace hypspec
