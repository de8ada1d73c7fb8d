/*
* Copyright 2026 The hgff Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hgff/cyclotomic.hpp"
#include "hgff/field.hpp"
#include "hgff/hyper.hpp"
#include "hgff/identities.hpp"
#include "hgff/varieties.hpp"

namespace hgff {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "hgff 1.0.0";

// {"m": m, "coeffs": ["num/den", ...]}, power basis order.
json cyclo_json(const CycloNum& v);
CycloNum cyclo_from_json(const json& j);

json field_json(const FieldCtx& F);
json hyp_value_json(const HypValue& v);
json report_json(const IdentityDescriptor& d, const VerifyReport& r);
json elliptic_json(const EllipticTrace& e);
json k3_json(const ZetaK3& z);
json dwork_json(const DworkReport& r);

// {"tool", "command", "field"?, "result", "elapsed_ms"}.
json envelope(const json& command, const json& result, double elapsed_ms);
// Drops every "elapsed_ms" key, recursively; used before golden comparison.
json strip_timing(json j);

std::string dump(const json& j);

}  // namespace hgff
