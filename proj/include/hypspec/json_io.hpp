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

#include <string>
#include <vector>

#include "json.hpp"

#include "hypspec/checks.hpp"
#include "hypspec/cuts.hpp"
#include "hypspec/report.hpp"
#include "hypspec/surface.hpp"
#include "hypspec/thick_thin.hpp"

namespace hypspec::json
{

using Json = nlohmann::ordered_json;

/// Canonical surface form, edges sorted by label.
Json to_json(const PantsSurface& surface);
/// Parses the surface schema; throws InvalidInput on shape errors and
/// SurfaceValidationError on topological ones.
PantsSurface surface_from_json(const Json& j);
PantsSurface surface_from_text(const std::string& text);

Json to_json(const AdmissibilityCheck& check);
Json to_json(const PantsSurface& surface, const ThickThinDecomposition& ttd);
Json to_json(const Multicut& cut);
Json to_json(const SpectralReport& report);
Json to_json(const std::vector<checks::SuiteResult>& results);
/// Per-edge collar table: ℓ, w_max, w_mod, Vol(T), Vol(S).
Json geometry_table(const PantsSurface& surface);

}  // namespace hypspec::json
