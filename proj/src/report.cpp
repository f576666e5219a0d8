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

#include "hypspec/report.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "hypspec/error.hpp"
#include "hypspec/network.hpp"
#include "hypspec/sturm.hpp"
#include "hypspec/thick_thin.hpp"

namespace hypspec
{

double cheeger_lower_bound(double L1, double volume)
{
    if (!(L1 > 0) || !(volume > 0)) throw InvalidInput("cheeger_lower_bound: L1 and volume must be > 0");
    return std::min(0.25, L1 * L1 / (4.0 * volume * volume));
}

SpectralReport assemble_report(const PantsSurface& surface, const ReportOptions& options)
{
    SpectralReport r;
    r.genus = surface.genus();
    r.epsilon = options.epsilon;

    const auto ttd = decompose(surface, options.epsilon, options.force_epsilon);
    r.forced_epsilon = ttd.forced;
    if (ttd.forced) r.warnings.push_back("epsilon forced past a failed admissibility condition");

    r.minimal_cut = min_separating_length(surface, 1);
    r.L1_restricted = r.minimal_cut.total_length;
    r.volume = total_volume(surface);
    r.cheeger_lower = cheeger_lower_bound(r.L1_restricted, r.volume);

    std::optional<NetworkModel> model;
    try {
        model = build_network(surface, ttd);
    } catch (const InvalidInput& e) {
        r.warnings.push_back(std::string("network skipped: ") + e.what());
    }
    if (model) {
        r.network_lambda1 = network_lambda1(*model);
        r.network_nodes = model->node_count();
        r.network_edges = model->edges.size();
        r.rayleigh_ramp = ramp_upper_bound(*model);
    }

    try {
        r.rayleigh_step = rayleigh_upper_bound(surface, r.minimal_cut);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("rayleigh bound on the minimal cut: ") + e.what());
    }
    r.rayleigh_upper = r.rayleigh_ramp ? std::min(r.rayleigh_step, *r.rayleigh_ramp) : r.rayleigh_step;

    // equal collars recur often in families, so solve each (ℓ, w) once
    std::map<std::pair<double, double>, CollarSpectrum> solved;
    for (const auto& tc : ttd.thin_collars) {
        const double ell = tc.collar.core_length();
        const double w = tc.collar.half_width();
        if (w <= 0) continue;
        auto it = solved.find({ell, w});
        if (it == solved.end()) {
            it = solved.emplace(std::pair{ell, w}, collar_dirichlet_lambda1(ell, w, options.ode_grid)).first;
        }
        const auto& s = it->second;
        r.collar_ode_lambda1.push_back({tc.label, ell, w, s.lambda1, s.previous_extrapolation, s.converged});
        if (!s.converged) {
            std::ostringstream os;
            os.precision(12);
            os << "collar '" << tc.label << "' extrapolation not converged: " << s.previous_extrapolation
               << " vs " << s.lambda1;
            r.warnings.push_back(os.str());
        }
        if (!(s.lambda1 > 0.25)) r.consistency_flags.collar_ode_above_quarter = false;
    }

    r.consistency_flags.cheeger_below_rayleigh = r.cheeger_lower <= r.rayleigh_upper;
    if (r.network_lambda1) {
        const double tol = 1e-12 * r.rayleigh_upper;
        r.consistency_flags.network_in_band =
            *r.network_lambda1 >= 0.5 * r.cheeger_lower && *r.network_lambda1 <= r.rayleigh_upper + tol;
    }
    return r;
}

ScalingRow scaling_row(const SpectralReport& report)
{
    ScalingRow row;
    row.genus = report.genus;
    row.L1 = report.L1_restricted;
    row.volume = report.volume;
    row.cheeger_lower = report.cheeger_lower;
    row.network_lambda1 = report.network_lambda1;
    row.rayleigh_upper = report.rayleigh_upper;
    if (report.network_lambda1) {
        const double g = report.genus;
        row.lambda1_times_g2_over_L1 = *report.network_lambda1 * g * g / report.L1_restricted;
    }
    return row;
}

std::vector<SpectralReport> scaling_study(
    const std::vector<int>& genera, double core_length, const ReportOptions& options, unsigned threads)
{
    std::vector<SpectralReport> out(genera.size());
    std::vector<std::exception_ptr> errors(genera.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next++; i < genera.size(); i = next++) {
            try {
                out[i] = assemble_report(build_chain_family({genera[i], core_length, {}}), options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, genera.size())));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::string format_number(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
    return {buf, res.ptr};
}

std::string scaling_csv(const std::vector<SpectralReport>& reports)
{
    std::string s = "genus,L1,volume,cheeger_lower,network_lambda1,rayleigh_upper,lambda1_times_g2_over_L1\n";
    for (const auto& r : reports) {
        const auto row = scaling_row(r);
        s += std::to_string(row.genus);
        s += ',' + format_number(row.L1);
        s += ',' + format_number(row.volume);
        s += ',' + format_number(row.cheeger_lower);
        s += ',' + (row.network_lambda1 ? format_number(*row.network_lambda1) : std::string{});
        s += ',' + format_number(row.rayleigh_upper);
        s += ',' + (row.lambda1_times_g2_over_L1 ? format_number(*row.lambda1_times_g2_over_L1) : std::string{});
        s += '\n';
    }
    return s;
}

}  // namespace hypspec
