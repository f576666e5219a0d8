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

#include "hypspec/json_io.hpp"

#include "hypspec/collar.hpp"
#include "hypspec/error.hpp"

namespace hypspec::json
{
namespace
{

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

template <class T>
T field(const Json& j, const char* key, const char* where)
{
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string(where) + ": missing field '" + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidInput(std::string(where) + ": field '" + key + "' has the wrong type");
    }
}

}  // namespace

Json to_json(const PantsSurface& surface)
{
    Json edges = Json::array();
    for (const auto& e : surface.edges()) {
        edges.push_back({{"a", surface.vertices()[e.a]},
                         {"b", surface.vertices()[e.b]},
                         {"length", e.length},
                         {"twist", e.twist},
                         {"label", e.label}});
    }
    return {{"genus", surface.genus()}, {"vertices", surface.vertices()}, {"edges", std::move(edges)}};
}

PantsSurface surface_from_json(const Json& j)
{
    SurfaceDescription d;
    d.genus = field<int>(j, "genus", "surface");
    d.vertices = field<std::vector<std::string>>(j, "vertices", "surface");
    const auto edges = field<Json>(j, "edges", "surface");
    if (!edges.is_array()) throw InvalidInput("surface: 'edges' must be an array");
    for (const auto& e : edges) {
        EdgeDescription ed;
        ed.a = field<std::string>(e, "a", "edge");
        ed.b = field<std::string>(e, "b", "edge");
        ed.length = field<double>(e, "length", "edge");
        ed.twist = e.contains("twist") ? field<double>(e, "twist", "edge") : 0.0;
        ed.label = field<std::string>(e, "label", "edge");
        d.edges.push_back(std::move(ed));
    }
    return build_from_description(d);
}

PantsSurface surface_from_text(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("surface JSON does not parse: ") + e.what());
    }
    return surface_from_json(j);
}

Json to_json(const AdmissibilityCheck& c)
{
    return {{"epsilon", c.epsilon},
            {"admissible", c.admissible()},
            {"width_condition", c.width_condition},
            {"width_value", c.width_value},
            {"volume_condition", c.volume_condition},
            {"collar_volume_range", {c.collar_volume_min, c.collar_volume_max}},
            {"shell_volume_range", {c.shell_volume_min, c.shell_volume_max}},
            {"injectivity_condition", c.injectivity_condition}};
}

Json to_json(const PantsSurface& surface, const ThickThinDecomposition& ttd)
{
    Json collars = Json::array();
    for (const auto& tc : ttd.thin_collars) {
        collars.push_back({{"label", tc.label},
                           {"length", tc.collar.core_length()},
                           {"half_width", tc.collar.half_width()},
                           {"collar_volume", tc.collar.volume()},
                           {"shell_volume", tc.collar.shell_volume()}});
    }
    Json comps = Json::array();
    for (const auto& comp : ttd.thick_components) {
        Json names = Json::array();
        for (auto v : comp) names.push_back(surface.vertices()[v]);
        comps.push_back(std::move(names));
    }
    return {{"epsilon", ttd.epsilon},
            {"forced_epsilon", ttd.forced},
            {"thin_collars", std::move(collars)},
            {"thick_components", std::move(comps)}};
}

Json to_json(const Multicut& cut)
{
    return {{"labels", cut.labels},
            {"total_length", cut.total_length},
            {"component_count", cut.component_count},
            {"restricted_to_pants_curves", true}};
}

Json to_json(const SpectralReport& r)
{
    Json odes = Json::array();
    for (const auto& e : r.collar_ode_lambda1) {
        odes.push_back({{"label", e.label},
                        {"length", e.core_length},
                        {"half_width", e.half_width},
                        {"lambda1", e.lambda1},
                        {"previous_extrapolation", e.previous_extrapolation},
                        {"converged", e.converged}});
    }
    const auto& f = r.consistency_flags;
    return {{"genus", r.genus},
            {"epsilon", r.epsilon},
            {"forced_epsilon", r.forced_epsilon},
            {"minimal_cut", to_json(r.minimal_cut)},
            {"L1_restricted", r.L1_restricted},
            {"volume", r.volume},
            {"cheeger_lower", r.cheeger_lower},
            {"network_lambda1", optional_number(r.network_lambda1)},
            {"network_lambda1_kind", "model estimate"},
            {"network_nodes", r.network_nodes},
            {"network_edges", r.network_edges},
            {"rayleigh_step", r.rayleigh_step},
            {"rayleigh_ramp", optional_number(r.rayleigh_ramp)},
            {"rayleigh_upper", r.rayleigh_upper},
            {"collar_ode_lambda1", std::move(odes)},
            {"consistency_flags",
             {{"cheeger_below_rayleigh", f.cheeger_below_rayleigh},
              {"collar_ode_above_quarter", f.collar_ode_above_quarter},
              {"network_in_band", f.network_in_band ? Json(*f.network_in_band) : Json(nullptr)}}},
            {"warnings", r.warnings}};
}

Json to_json(const std::vector<checks::SuiteResult>& results)
{
    Json suites = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json values = Json::object();
        for (const auto& [k, v] : r.values) values[k] = v;
        suites.push_back({{"name", r.name},
                          {"ok", r.ok()},
                          {"passed", r.passed},
                          {"total", r.total},
                          {"rejected", r.rejected},
                          {"values", std::move(values)},
                          {"failures", r.failures}});
        all = all && r.ok();
    }
    return {{"ok", all}, {"suites", std::move(suites)}};
}

Json geometry_table(const PantsSurface& surface)
{
    Json rows = Json::array();
    for (const auto& e : surface.edges()) {
        const double ell = e.length;
        const double wm = modified_half_width(ell);
        rows.push_back({{"label", e.label},
                        {"length", ell},
                        {"w_max", max_half_width(ell)},
                        {"w_mod", wm},
                        {"collar_volume", collar_volume(ell, wm)},
                        {"shell_volume", shell_volume(ell, wm)}});
    }
    return rows;
}

}  // namespace hypspec::json
