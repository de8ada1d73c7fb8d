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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgff/json_io.hpp"

namespace hgff {

// Element selector: decimal code, g^k, or "all". With skip01 the codes 0 and
// 1 are left out of "all".
std::vector<int> parse_lambda(const FieldCtx& F, const std::string& spec, bool skip01 = false);
// Comma-separated q list; every entry must be a prime power.
std::vector<int64_t> parse_q_list(const std::string& csv);
std::vector<std::string> split_csv(const std::string& csv);
// Syntax check of a character name, usable before any field exists.
bool char_name_ok(const std::string& name);

json cmd_gauss(const FieldPtr& F, const std::string& ch, bool circle);
json cmd_jacobi(const FieldPtr& F, const std::vector<std::string>& chars, bool brute);
json cmd_poch(const FieldPtr& F, const std::string& alpha, const std::string& nu, bool circle);
json cmd_hyp(const FieldPtr& F, const std::string& num, const std::string& den, const std::string& lambda,
             bool reduced);
json cmd_lauricella(const FieldPtr& F, const std::string& kind, const std::string& params,
                    const std::string& lambdas);
json cmd_kloosterman(const FieldPtr& F, const std::vector<std::string>& chars, const std::string& lambda);

struct VerifyOutcome {
    json result;
    size_t failed = 0;  // reports with at least one failure
};
// ids may hold "all". mutate_seed set: every rhs is evaluated at a mutated binding.
VerifyOutcome cmd_verify(const std::vector<std::string>& ids, const std::vector<FieldPtr>& fields,
                         const VerifyMode& mode, int jobs, std::optional<uint64_t> mutate_seed = {});

struct CountOutcome {
    json result;
    size_t disagree = 0;
};
// kind: elliptic | k3. ext > 1 adds the degree-ext recount of b.
CountOutcome cmd_count(const FieldPtr& F, const std::string& kind, const std::string& lambda, int ext, int jobs);
CountOutcome cmd_dwork(const FieldPtr& F, const std::string& lambda, int jobs);
json cmd_list();

// name -> payload, fixed order; payloads carry no timing fields.
std::vector<std::pair<std::string, json>> golden_fixtures();

}  // namespace hgff
