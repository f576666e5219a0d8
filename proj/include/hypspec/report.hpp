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
#include <optional>
#include <string>
#include <vector>

#include "hypspec/cuts.hpp"
#include "hypspec/surface.hpp"

namespace hypspec
{

/// min(1/4, L1²/(4 vol²)).
double cheeger_lower_bound(double L1, double volume);

struct CollarOdeEntry {
    std::string label;
    double core_length{0};
    double half_width{0};
    double lambda1{0};
    double previous_extrapolation{0};
    bool converged{true};
};

struct ConsistencyFlags {
    bool cheeger_below_rayleigh{false};   // (a)
    bool collar_ode_above_quarter{true};  // (b)
    /// (c) network λ₁ in [cheeger/2, rayleigh]; empty when no network exists
    std::optional<bool> network_in_band;
};

struct SpectralReport {
    int genus{0};
    double epsilon{0};
    bool forced_epsilon{false};
    Multicut minimal_cut;
    double L1_restricted{0};
    double volume{0};
    double cheeger_lower{0};
    std::optional<double> network_lambda1;  // model estimate
    std::size_t network_nodes{0};
    std::size_t network_edges{0};
    double rayleigh_step{0};
    std::optional<double> rayleigh_ramp;
    double rayleigh_upper{0};  // min of the available test functions
    std::vector<CollarOdeEntry> collar_ode_lambda1;
    ConsistencyFlags consistency_flags;
    std::vector<std::string> warnings;
};

struct ReportOptions {
    double epsilon{0.05};
    bool force_epsilon{false};
    std::size_t ode_grid{1024};
};

SpectralReport assemble_report(const PantsSurface& surface, const ReportOptions& options = {});

struct ScalingRow {
    int genus{0};
    double L1{0};
    double volume{0};
    double cheeger_lower{0};
    std::optional<double> network_lambda1;
    double rayleigh_upper{0};
    /// network λ₁·g²/L1
    std::optional<double> lambda1_times_g2_over_L1;
};

ScalingRow scaling_row(const SpectralReport& report);

/**
 * Chain family at one core length across genera. Genera are processed on up
 * to `threads` workers (0 = hardware concurrency); rows keep input order.
 */
std::vector<SpectralReport> scaling_study(
    const std::vector<int>& genera, double core_length, const ReportOptions& options, unsigned threads = 1);

/// Header plus one row per report, 12 significant digits, '.' decimal.
std::string scaling_csv(const std::vector<SpectralReport>& reports);

/// Locale-free shortest form with 12 significant digits.
std::string format_number(double x);

}  // namespace hypspec
