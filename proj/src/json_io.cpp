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

#include "hgff/json_io.hpp"

#include "hgff/characters.hpp"
#include "hgff/errors.hpp"

namespace hgff {

json cyclo_json(const CycloNum& v) {
    json j;
    j["m"] = v.m();
    j["coeffs"] = v.coeff_strs();
    return j;
}

CycloNum cyclo_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs")) throw UsageError("not a CycloNum object");
    return CycloNum::from_coeff_strs(j.at("m").get<int>(), j.at("coeffs").get<std::vector<std::string>>());
}

json field_json(const FieldCtx& F) {
    return json{{"p", F.p}, {"e", F.e}, {"q", F.q}, {"modulus", F.modulus}, {"generator", F.generator}};
}

json hyp_value_json(const HypValue& v) {
    return json{{"value", cyclo_json(v.value)}, {"conductor", v.conductor}, {"psi_independent", v.psi_independent}};
}

namespace {

json binding_json(const IdentityDescriptor& d, const FieldCtx& F, const Binding& b) {
    json o = json::object();
    for (size_t i = 0; i < d.slots.size() && i < b.size(); ++i) {
        const Slot& s = d.slots[i];
        switch (s.kind) {
        case SlotKind::Char:
            o[s.name] = char_name(F, b[i]);
            break;
        case SlotKind::Elem:
            o[s.name] = b[i];
            break;
        case SlotKind::Choice:
            o[s.name] = s.choices.at(b[i]);
            break;
        }
    }
    return o;
}

}  // namespace

json report_json(const IdentityDescriptor& d, const VerifyReport& r) {
    json j;
    j["identity"] = r.identity;
    j["anchor"] = d.anchor;
    j["field"] = field_json(*r.field);
    if (r.mode.exhaustive) j["mode"] = json{{"kind", "exhaustive"}};
    else j["mode"] = json{{"kind", "sample"}, {"n", r.mode.n}, {"seed", r.mode.seed}};
    j["cases_checked"] = r.cases_checked;
    j["skipped"] = r.skipped;
    if (r.skipped) j["skip_reason"] = r.skip_reason;
    json fs = json::array();
    for (const auto& f : r.failures)
        fs.push_back(json{{"case", json{{"key", f.key}, {"binding", binding_json(d, *r.field, f.binding)}}},
                          {"lhs", cyclo_json(f.lhs)},
                          {"rhs", cyclo_json(f.rhs)}});
    j["failures"] = fs;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

json elliptic_json(const EllipticTrace& e) {
    json j{{"lambda", e.lambda}, {"a", e.a}};
    j["a_hyp"] = e.a_hyp ? json(*e.a_hyp) : json(nullptr);
    j["methods_agree"] = e.agree;
    return j;
}

json k3_json(const ZetaK3& z) {
    json j{{"lambda", z.lambda}, {"a", z.a}, {"b", z.b_naive}, {"u", z.u}};
    j["b_methods"] = json{{"naive", z.b_naive}, {"hyp", z.b_hyp}, {"split", z.b_split}};
    j["points"] = z.points;
    if (!z.trivial_roots.empty()) {
        j["trivial_roots"] = z.trivial_roots;
        j["pair"] = json{{"sum", z.pair_sum}, {"product", z.pair_prod}};
    }
    j["methods_agree"] = z.agree;
    return j;
}

json dwork_json(const DworkReport& r) {
    json j{{"lambda", r.lambda}, {"F", {r.F[0], r.F[1], r.F[2]}}, {"P", {r.e1, r.e2, r.e3}}};
    j["u"] = r.u;
    j["v"] = r.v;
    j["w"] = r.w;
    j["e3_is_q3"] = r.e3_ok;
    j["square"] = r.square;
    json rs = json::array();
    for (const auto& x : r.roots)
        rs.push_back(json{{"r", x.r}, {"lambda_prime", x.lambda_prime}, {"a", x.a}, {"matched", x.matched}});
    j["roots"] = rs;
    j["matched"] = r.matched;
    return j;
}

json envelope(const json& command, const json& result, double elapsed_ms) {
    json j;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["result"] = result;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace hgff
