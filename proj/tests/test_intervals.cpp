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
#include <random>

#include "hypspec/error.hpp"
#include "hypspec/intervals.hpp"

using namespace hypspec;
using doctest::Approx;

namespace
{

IntervalSystem sys(std::vector<Interval> iv, std::vector<std::pair<std::pair<int, int>, double>> w)
{
    const auto n = iv.size();
    std::vector<double> m(n * n, 0.0);
    for (auto [ij, v] : w) m[static_cast<std::size_t>(ij.first) * n + static_cast<std::size_t>(ij.second)] = v;
    return {std::move(iv), std::move(m)};
}

IntervalSystem random_system(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(0, 10), wt(0, 3);
    std::vector<double> ends(2 * n);
    for (auto& x : ends) x = u(rng);
    std::sort(ends.begin(), ends.end());
    std::vector<Interval> iv(n);
    for (std::size_t i = 0; i < n; ++i) iv[i] = {ends[2 * i], ends[2 * i + 1]};
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = rng() % 3 == 0 ? 0.0 : wt(rng);
    }
    return {iv, m};
}

// the inequality's two sides written out directly
std::pair<double, double> sides(const IntervalSystem& s, std::size_t k0)
{
    const auto iv = s.intervals();
    const auto n = s.size();
    double lhs = 0, cut = 0, covered = 0;
    for (std::size_t i = 0; i < n; ++i) {
        covered += iv[i].hi - iv[i].lo;
        for (std::size_t j = i + 1; j < n; ++j) {
            lhs += s.weight(i, j) * std::max(0.0, iv[j].lo - iv[i].hi);
            if (i < k0 && j >= k0) cut += s.weight(i, j);
        }
    }
    return {lhs, (iv[n - 1].hi - iv[0].lo - covered) * cut};
}

}  // namespace

TEST_CASE("weighted gap sum")
{
    CHECK(weighted_gap_sum(sys({{0, 1}}, {})) == 0.0);
    CHECK(weighted_gap_sum(sys({{0, 1}, {2, 3}}, {{{0, 1}, 1.0}})) == Approx(1.0));
    CHECK(weighted_gap_sum(sys({{0, 0}, {1, 1}, {2, 2}}, {{{0, 2}, 1.0}})) == Approx(2.0));
    // lower triangle is ignored
    CHECK(weighted_gap_sum(sys({{0, 1}, {2, 3}}, {{{1, 0}, 5.0}})) == 0.0);
    CHECK(interval_distance({0, 1}, {3, 4}) == 2.0);
    CHECK(interval_distance({0, 2}, {1, 4}) == 0.0);
}

TEST_CASE("interval system validation")
{
    CHECK_THROWS_AS(sys({}, {}), InvalidInput);
    CHECK_THROWS_AS(sys({{1, 0}}, {}), InvalidInput);
    CHECK_THROWS_AS(sys({{0, 2}, {1, 3}}, {}), InvalidInput);
    CHECK_THROWS_AS(sys({{0, 1}, {2, 3}}, {{{0, 1}, -1.0}}), InvalidInput);
}

TEST_CASE("cut index small cases")
{
    const auto two = sys({{0, 1}, {2, 3}}, {{{0, 1}, 1.0}});
    CHECK(find_cut_index(two) == 1);
    const auto c = verify_cut_inequality(two, 1);
    CHECK(c.holds);
    CHECK(c.lhs == Approx(1.0));
    CHECK(c.rhs == Approx(1.0));

    const auto three = sys({{0, 0}, {1, 1}, {2, 2}}, {{{0, 2}, 1.0}});
    for (std::size_t k : {1, 2}) {
        const auto r = verify_cut_inequality(three, k);
        CHECK(r.holds);
        CHECK(r.lhs == Approx(2.0));
        CHECK(r.rhs == Approx(2.0));
    }
    const auto k0 = find_cut_index(three);
    CHECK((k0 == 1 || k0 == 2));
    CHECK_THROWS_AS(find_cut_index(sys({{0, 1}}, {})), InvalidInput);
    CHECK_THROWS_AS(three.cut_weight(0), InvalidInput);
    CHECK_THROWS_AS(three.cut_weight(3), InvalidInput);
}

TEST_CASE("vacuous when the intervals cover their hull")
{
    const auto touching = sys({{0, 1}, {1, 2}, {2, 3}}, {{{0, 1}, 1.0}, {{1, 2}, 2.0}, {{0, 2}, 3.0}});
    for (std::size_t k : {1, 2}) {
        const auto c = verify_cut_inequality(touching, k);
        CHECK(c.holds);
        CHECK(c.vacuous);
    }
}

TEST_CASE("randomized: returned index always satisfies the inequality")
{
    std::mt19937_64 rng(17);
    std::size_t witnesses = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = 2 + static_cast<std::size_t>(rng() % 7);
        const auto s = random_system(rng, n);
        const auto k0 = find_cut_index(s);
        REQUIRE(k0 >= 1);
        REQUIRE(k0 < n);
        const auto c = verify_cut_inequality(s, k0);
        CHECK(c.holds);
        const auto [lhs, rhs] = sides(s, k0);
        CHECK(c.lhs == Approx(lhs).epsilon(1e-12));
        CHECK(c.rhs == Approx(rhs).epsilon(1e-12));
        bool some_fail = false;
        for (std::size_t k = 1; k < n; ++k) some_fail |= !verify_cut_inequality(s, k).holds;
        witnesses += some_fail;
    }
    // adversarial cases exist: some cut index fails while the returned one holds
    CHECK(witnesses > 0);
}

TEST_CASE("randomized: larger systems")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 2 + static_cast<std::size_t>(rng() % 63);
        const auto s = random_system(rng, n);
        CHECK(verify_cut_inequality(s, find_cut_index(s)).holds);
    }
}

TEST_CASE("trace records one round per collapse")
{
    std::mt19937_64 rng(29);
    const auto s = random_system(rng, 6);
    const auto tr = find_cut_index_traced(s);
    CHECK(tr.k0 == find_cut_index(s));
    CHECK(tr.collapsed_left.size() == 4);
    CHECK(tr.functional.size() == 1 + 2 * tr.collapsed_left.size());
    // a collapse never increases the functional
    for (std::size_t r = 0; r < tr.collapsed_left.size(); ++r) {
        CHECK(tr.functional[2 * r + 1] <= tr.functional[2 * r] + 1e-12);
    }
}

TEST_CASE("merging to disjoint blocks")
{
    const std::vector<Interval> raw{{0, 1}, {0.5, 2}, {3, 4}};
    const auto m = merge_to_disjoint(raw);
    REQUIRE(m.blocks.size() == 2);
    CHECK(m.blocks[0].lo == 0);
    CHECK(m.blocks[0].hi == 2);
    CHECK(m.assignment == std::vector<std::size_t>{0, 0, 1});
    CHECK(reduced_gap(m, 0, 1) == 0.0);
    CHECK(reduced_gap(m, 0, 2) == Approx(1.0));

    const std::vector<Interval> nested{{0, 5}, {1, 2}};
    const auto n = merge_to_disjoint(nested);
    CHECK(n.blocks.size() == 1);
    CHECK(n.assignment == std::vector<std::size_t>{0, 0});

    const std::vector<Interval> apart{{5, 6}, {0, 1}};
    const auto a = merge_to_disjoint(apart);
    CHECK(a.blocks.size() == 2);
    CHECK(a.assignment == std::vector<std::size_t>{1, 0});

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0, 10), len(0, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Interval> iv(2 + rng() % 8);
        for (auto& x : iv) {
            x.lo = u(rng);
            x.hi = x.lo + len(rng);
        }
        const auto mm = merge_to_disjoint(iv);
        for (std::size_t b = 1; b < mm.blocks.size(); ++b) CHECK(mm.blocks[b].lo > mm.blocks[b - 1].hi);
        for (std::size_t i = 0; i < iv.size(); ++i) {
            for (std::size_t j = 0; j < iv.size(); ++j) {
                CHECK(reduced_gap(mm, i, j) <= interval_distance(iv[i], iv[j]) + 1e-12);
            }
        }
    }
}
