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

#include "hypspec/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "hypspec/error.hpp"

namespace hypspec
{
namespace
{

void require_piece_index(const PantsSurface& surface, int i)
{
    const int g = surface.genus();
    if (i < 1 || i > 2 * g - 3) {
        throw InvalidInput(
            "piece index i must lie in [1, 2g-3] = [1, " + std::to_string(2 * g - 3) +
            "], got " + std::to_string(i));
    }
}

bool nearly_equal(double a, double b)
{
    return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

// Strictly better: shorter beyond tolerance, or tied and lexicographically
// smaller index set (index order is label order).
bool better(double len, const std::vector<std::size_t>& set, double best_len,
            const std::vector<std::size_t>& best_set)
{
    if (nearly_equal(len, best_len)) return set < best_set;
    return len < best_len;
}

class Search
{
public:
    Search(const PantsSurface& s, std::size_t want) : surface_{s}, want_{want}
    {
        const auto edges = s.edges();
        removed_.assign(edges.size(), 0);
        order_.resize(edges.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return edges[a].length < edges[b].length;
        });
        // removing everything always yields 2g-2 ≥ i+1 pieces
        best_.resize(edges.size());
        std::iota(best_.begin(), best_.end(), 0);
        best_len_ = sum_in_index_order(best_);
    }

    std::vector<std::size_t> exhaustive()
    {
        const auto n = order_.size();
        std::vector<std::size_t> set;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            set.clear();
            for (std::size_t e = 0; e < n; ++e) {
                removed_[e] = (mask >> e) & 1u;
                if (removed_[e]) set.push_back(e);
            }
            if (dual_components(surface_, removed_).count < want_) continue;
            offer(set);
        }
        return best_;
    }

    std::vector<std::size_t> branch_and_bound()
    {
        std::fill(removed_.begin(), removed_.end(), 0);
        descend(0, 0.0);
        return best_;
    }

private:
    double sum_in_index_order(const std::vector<std::size_t>& set) const
    {
        double s = 0;
        for (auto e : set) s += surface_.edges()[e].length;
        return s;
    }

    void offer(const std::vector<std::size_t>& set)
    {
        const double len = sum_in_index_order(set);
        if (better(len, set, best_len_, best_)) {
            best_ = set;
            best_len_ = len;
        }
    }

    std::vector<std::size_t> current_set() const
    {
        std::vector<std::size_t> set;
        for (std::size_t e = 0; e < removed_.size(); ++e) {
            if (removed_[e]) set.push_back(e);
        }
        return set;
    }

    void descend(std::size_t depth, double partial)
    {
        const auto pieces = dual_components(surface_, removed_).count;
        if (partial > 0 && pieces >= want_) {
            // every superset is strictly longer
            offer(current_set());
            return;
        }
        if (depth == order_.size()) return;

        // infeasible even if every remaining edge goes
        scratch_ = removed_;
        for (auto k = depth; k < order_.size(); ++k) scratch_[order_[k]] = 1;
        if (dual_components(surface_, scratch_).count < want_) return;

        // one removal adds at most one piece, so at least `need` more edges,
        // and the remaining ones are sorted by length
        const auto need = want_ - pieces;
        double bound = partial;
        for (std::size_t k = 0; k < need; ++k) bound += surface_.edges()[order_[depth + k]].length;
        if (bound > best_len_ && !nearly_equal(bound, best_len_)) return;

        const auto e = order_[depth];
        removed_[e] = 1;
        descend(depth + 1, partial + surface_.edges()[e].length);
        removed_[e] = 0;
        descend(depth + 1, partial);
    }

    const PantsSurface& surface_;
    std::size_t want_;
    std::vector<char> removed_;
    std::vector<char> scratch_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> best_;
    double best_len_{std::numeric_limits<double>::infinity()};
};

}  // namespace

Multicut make_multicut(const PantsSurface& surface, std::vector<std::size_t> edges)
{
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InvalidInput("multicut: duplicate edge");
    }
    Multicut m;
    std::vector<char> removed(surface.edge_count(), 0);
    for (auto e : edges) {
        if (e >= surface.edge_count()) throw InvalidInput("multicut: edge index out of range");
        removed[e] = 1;
        m.labels.push_back(surface.edges()[e].label);
        m.total_length += surface.edges()[e].length;
    }
    m.edges = std::move(edges);
    m.component_count = dual_components(surface, removed).count;
    return m;
}

Multicut min_separating_length(const PantsSurface& surface, int i, CutSearch search)
{
    require_piece_index(surface, i);
    const auto n = surface.edge_count();
    if (search == CutSearch::automatic) {
        search = n <= kAutoExhaustiveEdges ? CutSearch::exhaustive : CutSearch::branch_and_bound;
    }
    if (search == CutSearch::exhaustive && n > kMaxExhaustiveEdges) {
        throw InvalidInput(
            "exhaustive cut search is limited to " + std::to_string(kMaxExhaustiveEdges) +
            " edges; surface has " + std::to_string(n));
    }
    Search s(surface, static_cast<std::size_t>(i) + 1);
    auto best = search == CutSearch::exhaustive ? s.exhaustive() : s.branch_and_bound();
    return make_multicut(surface, std::move(best));
}

double bers_upper_bound(int i, int genus)
{
    if (genus < 2) throw InvalidInput("bers_upper_bound: genus must be >= 2");
    if (i < 1 || i > 2 * genus - 3) {
        throw InvalidInput("bers_upper_bound: i must lie in [1, 2g-3]");
    }
    return 78.0 * i * (genus - 1);
}

Multicut pants_block_cut(const PantsSurface& surface, std::span<const std::size_t> picked)
{
    const int g = surface.genus();
    if (picked.empty() || picked.size() > static_cast<std::size_t>(2 * g - 3)) {
        throw InvalidInput("pants_block_cut: pick between 1 and 2g-3 pants");
    }
    std::vector<char> chosen(surface.vertex_count(), 0);
    for (auto v : picked) {
        if (v >= surface.vertex_count()) throw InvalidInput("pants_block_cut: vertex out of range");
        if (chosen[v]) throw InvalidInput("pants_block_cut: vertex picked twice");
        chosen[v] = 1;
    }
    std::vector<std::size_t> edges;
    const auto all = surface.edges();
    for (std::size_t e = 0; e < all.size(); ++e) {
        if (chosen[all[e].a] || chosen[all[e].b]) edges.push_back(e);
    }
    return make_multicut(surface, std::move(edges));
}

Multicut pants_block_cut(const PantsSurface& surface, int i)
{
    require_piece_index(surface, i);
    std::vector<std::vector<std::size_t>> adj(surface.vertex_count());
    for (const auto& e : surface.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(surface.vertex_count(), 0);
    std::vector<std::size_t> picked;
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty() && picked.size() < static_cast<std::size_t>(i)) {
        auto v = queue.front();
        queue.pop_front();
        picked.push_back(v);
        for (auto u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }
    return pants_block_cut(surface, picked);
}

}  // namespace hypspec
