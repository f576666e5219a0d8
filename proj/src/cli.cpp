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

#include "hypspec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hypspec/checks.hpp"
#include "hypspec/collar.hpp"
#include "hypspec/cuts.hpp"
#include "hypspec/error.hpp"
#include "hypspec/json_io.hpp"
#include "hypspec/network.hpp"
#include "hypspec/report.hpp"
#include "hypspec/sturm.hpp"
#include "hypspec/thick_thin.hpp"

namespace hypspec::cli
{
namespace
{

struct SurfaceSource {
    std::string input;
    std::string family;
    int genus{0};
    double length{0};
};

struct Config {
    double epsilon{kDefaultEpsilon};
    bool force_epsilon{false};
    std::string format{"json"};
    std::string output;
    SurfaceSource source;
    int cut_index{1};
    bool exhaustive{false};
    bool bnb{false};
    std::string genus_list{"4,8,16,32,64"};
    double scaling_length{0.09};
    std::uint64_t seed{42};
    std::size_t ode_grid{1024};
};

void add_surface_options(CLI::App* sub, SurfaceSource& src)
{
    sub->add_option("--input", src.input, "surface JSON file ('-' for stdin)");
    sub->add_option("--family", src.family, "generated family (chain)");
    sub->add_option("--genus", src.genus, "genus of the generated surface");
    sub->add_option("--length", src.length, "core length of every pants curve in the family");
}

PantsSurface load_surface(const SurfaceSource& src)
{
    if (!src.input.empty() && !src.family.empty()) {
        throw InvalidInput("give either --input or --family, not both");
    }
    if (!src.input.empty()) {
        std::stringstream buf;
        if (src.input == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream in(src.input);
            if (!in) throw InvalidInput("cannot read '" + src.input + "'");
            buf << in.rdbuf();
        }
        return json::surface_from_text(buf.str());
    }
    if (src.family == "chain") return build_chain_family({src.genus, src.length, {}});
    if (src.family.empty()) throw InvalidInput("no surface given: use --input FILE or --family chain");
    throw InvalidInput("unknown family '" + src.family + "' (known: chain)");
}

std::vector<int> parse_genus_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int g = 0;
        try {
            g = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("bad genus list entry '" + item + "'");
        out.push_back(g);
    }
    if (out.empty()) throw InvalidInput("empty genus list");
    return out;
}

unsigned thread_cap()
{
    const char* env = std::getenv("HYPSPEC_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw InvalidInput(std::string("HYPSPEC_THREADS must be a nonnegative integer, got '") + env + "'");
    return static_cast<unsigned>(v);
}

std::string geometry_csv(const PantsSurface& s)
{
    std::string out = "label,length,w_max,w_mod,collar_volume,shell_volume\n";
    for (const auto& e : s.edges()) {
        const double w = modified_half_width(e.length);
        out += e.label + ',' + format_number(e.length) + ',' + format_number(max_half_width(e.length)) + ',' +
               format_number(w) + ',' + format_number(collar_volume(e.length, w)) + ',' +
               format_number(shell_volume(e.length, w)) + '\n';
    }
    return out;
}

std::string verify_csv(const std::vector<checks::SuiteResult>& results)
{
    std::string out = "suite,ok,passed,total,rejected\n";
    for (const auto& r : results) {
        out += r.name + ',' + (r.ok() ? "true" : "false") + ',' + std::to_string(r.passed) + ',' +
               std::to_string(r.total) + ',' + std::to_string(r.rejected) + '\n';
    }
    return out;
}

void require_json(const Config& cfg, const std::string& cmd)
{
    if (cfg.format != "json") throw InvalidInput("'" + cmd + "' only supports --format json");
}

std::string dump(const json::Json& j) { return j.dump(2) + '\n'; }

int run(const std::string& cmd, const Config& cfg, std::string& text)
{
    if (cmd == "verify") {
        const auto results = checks::run_all(cfg.seed);
        text = cfg.format == "json" ? dump(json::to_json(results)) : verify_csv(results);
        for (const auto& r : results) {
            if (!r.ok()) return kExitVerifyFailed;
        }
        return kExitOk;
    }

    ReportOptions opts{cfg.epsilon, cfg.force_epsilon, cfg.ode_grid};
    if (cmd == "scaling") {
        const auto genera = parse_genus_list(cfg.genus_list);
        const auto reports = scaling_study(genera, cfg.scaling_length, opts, thread_cap());
        if (cfg.format == "csv") {
            text = scaling_csv(reports);
        } else {
            json::Json arr = json::Json::array();
            for (const auto& r : reports) arr.push_back(json::to_json(r));
            text = dump(arr);
        }
        return kExitOk;
    }

    const auto surface = load_surface(cfg.source);
    if (cmd == "build") {
        require_json(cfg, cmd);
        text = dump(json::to_json(surface));
    } else if (cmd == "geometry") {
        text = cfg.format == "csv" ? geometry_csv(surface) : dump(json::geometry_table(surface));
    } else if (cmd == "thickthin") {
        require_json(cfg, cmd);
        const auto ttd = decompose(surface, cfg.epsilon, cfg.force_epsilon);
        auto j = json::to_json(surface, ttd);
        j["admissibility"] = json::to_json(epsilon_admissible(cfg.epsilon));
        text = dump(j);
    } else if (cmd == "cuts") {
        require_json(cfg, cmd);
        if (cfg.exhaustive && cfg.bnb) throw InvalidInput("--exhaustive and --bnb are exclusive");
        const auto search = cfg.exhaustive ? CutSearch::exhaustive
                            : cfg.bnb      ? CutSearch::branch_and_bound
                                           : CutSearch::automatic;
        auto j = json::to_json(min_separating_length(surface, cfg.cut_index, search));
        j["i"] = cfg.cut_index;
        j["bers_bound"] = bers_upper_bound(cfg.cut_index, surface.genus());
        text = dump(j);
    } else if (cmd == "spectrum") {
        require_json(cfg, cmd);
        const auto ttd = decompose(surface, cfg.epsilon, cfg.force_epsilon);
        json::Json j;
        try {
            const auto model = build_network(surface, ttd);
            j["network_lambda1"] = network_lambda1(model);
            j["network_lambda1_kind"] = "model estimate";
            j["network_eigenvalues"] = network_spectrum(model);
            j["node_masses"] = model.node_masses;
        } catch (const InvalidInput& e) {
            j["network_lambda1"] = nullptr;
            j["network_skipped"] = e.what();
        }
        json::Json odes = json::Json::array();
        for (const auto& tc : ttd.thin_collars) {
            if (tc.collar.half_width() <= 0) continue;
            const auto s = collar_dirichlet_lambda1(tc.collar.core_length(), tc.collar.half_width(), cfg.ode_grid);
            odes.push_back({{"label", tc.label},
                            {"length", tc.collar.core_length()},
                            {"half_width", tc.collar.half_width()},
                            {"lambda1", s.lambda1},
                            {"converged", s.converged},
                            {"mode_lambdas", s.mode_lambdas}});
        }
        j["collar_ode_lambda1"] = std::move(odes);
        text = dump(j);
    } else if (cmd == "bounds") {
        require_json(cfg, cmd);
        text = dump(json::to_json(assemble_report(surface, opts)));
    } else {
        throw InvalidInput("unknown subcommand '" + cmd + "'");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Spectral gap bounds for hyperbolic surfaces with short pants curves", "hypspec"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--epsilon", cfg.epsilon, "thick-thin parameter")->capture_default_str();
    app.add_flag("--force-epsilon", cfg.force_epsilon, "run even if epsilon fails admissibility");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "write output to this file instead of stdout");
    app.add_option("--ode-grid", cfg.ode_grid, "interior nodes of the coarsest collar ODE grid")
        ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 20))
        ->capture_default_str();

    auto* build = app.add_subcommand("build", "emit the surface as JSON");
    add_surface_options(build, cfg.source);
    auto* geometry = app.add_subcommand("geometry", "collar table per pants curve");
    add_surface_options(geometry, cfg.source);
    auto* thickthin = app.add_subcommand("thickthin", "modified thick-thin decomposition");
    add_surface_options(thickthin, cfg.source);
    auto* cuts = app.add_subcommand("cuts", "shortest separating pants-curve system");
    add_surface_options(cuts, cfg.source);
    cuts->add_option("--i", cfg.cut_index, "separate into at least i+1 pieces")->capture_default_str();
    cuts->add_flag("--exhaustive", cfg.exhaustive, "force exhaustive enumeration");
    cuts->add_flag("--bnb", cfg.bnb, "force branch and bound");
    auto* spectrum = app.add_subcommand("spectrum", "network spectrum and collar Dirichlet eigenvalues");
    add_surface_options(spectrum, cfg.source);
    auto* bounds = app.add_subcommand("bounds", "assembled spectral report");
    add_surface_options(bounds, cfg.source);
    auto* scaling = app.add_subcommand("scaling", "chain-family scaling study");
    scaling->add_option("--genus-list", cfg.genus_list, "comma-separated genera")->capture_default_str();
    scaling->add_option("--length", cfg.scaling_length, "core length")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "seeded property and oracle suites");
    verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        const auto adm = epsilon_admissible(cfg.epsilon);
        if (!adm.admissible() && !cfg.force_epsilon) throw InadmissibleEpsilon(cfg.epsilon, adm.failures());
        if (!adm.admissible()) err << "warning: epsilon " << cfg.epsilon << " forced past failed admissibility\n";

        std::string text;
        const int code = run(cmd, cfg, text);
        if (cfg.output.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f) throw InvalidInput("cannot write '" + cfg.output + "'");
            f << text;
        }
        if (code == kExitVerifyFailed) err << "verify: some checks failed\n";
        return code;
    } catch (const InadmissibleEpsilon& e) {
        err << "error: " << e.what() << '\n';
        return kExitInadmissibleEpsilon;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hypspec::cli
