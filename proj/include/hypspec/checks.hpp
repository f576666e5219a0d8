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

#include <cstdint>
#include <string>
#include <vector>

namespace hypspec::checks
{

/** @brief Outcome of one seeded verification suite */
struct SuiteResult {
    std::string name;
    std::size_t total{0};
    std::size_t passed{0};
    std::size_t rejected{0};              // samples discarded by a precondition filter
    std::vector<std::string> failures;    // first few, for the log
    std::vector<std::pair<std::string, double>> values;  // named diagnostics

    bool ok() const noexcept { return total > 0 && passed == total; }
    void record(bool pass, const std::string& what);
    double value(const std::string& key) const;
};

SuiteResult collar_identities();
SuiteResult thick_thin_constants();
SuiteResult shell_detour(std::uint64_t seed, std::size_t pairs = 10000);
/// Nine-point (ℓ, w) grid plus the long collar, λ₁ > 1/4 at each.
SuiteResult collar_ode_sweep();
SuiteResult crossing_corpus(std::uint64_t seed, std::size_t count = 200);
SuiteResult cutoff_corpus(std::uint64_t seed, std::size_t count = 100, double delta = 1.0 / 64.0);
SuiteResult interval_suite(std::uint64_t seed, std::size_t count = 500, std::size_t max_n = 8);
SuiteResult cut_suite(std::uint64_t seed);

/// Everything run by `verify`, in a fixed order.
std::vector<SuiteResult> run_all(std::uint64_t seed);

/// Plain-text summary, one line per suite, stable across runs.
std::string summarize(const std::vector<SuiteResult>& results);

}  // namespace hypspec::checks
