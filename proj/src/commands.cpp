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

#include "hgff/commands.hpp"

#include <regex>
#include <sstream>

#include <omp.h>

#include "hgff/characters.hpp"
#include "hgff/errors.hpp"

namespace hgff {

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

bool char_name_ok(const std::string& name) {
    static const std::regex re("e|eps|phi|sigma|sigma3|rho|rho2|w\\^-?[0-9]+");
    return std::regex_match(name, re);
}

std::vector<int> parse_lambda(const FieldCtx& F, const std::string& spec, bool skip01) {
    std::vector<int> out;
    if (spec == "all") {
        for (int x = skip01 ? 2 : 0; x < F.q; ++x) out.push_back(x);
        return out;
    }
    for (const auto& tok : split_csv(spec)) {
        static const std::regex gk("g\\^(-?[0-9]+)"), code("[0-9]+");
        std::smatch m;
        if (std::regex_match(tok, m, gk)) {
            out.push_back(F.gpow(std::stoll(m[1])));
        } else if (std::regex_match(tok, code)) {
            long long v = std::stoll(tok);
            if (v >= F.q) throw UsageError("lambda code " + tok + " out of range for q=" + std::to_string(F.q));
            out.push_back(int(v));
        } else {
            throw UsageError("bad lambda: " + tok + " (want code, g^k or all)");
        }
    }
    if (out.empty()) throw UsageError("empty lambda list");
    return out;
}

std::vector<int64_t> parse_q_list(const std::string& csv) {
    std::vector<int64_t> out;
    for (const auto& tok : split_csv(csv)) {
        static const std::regex num("[0-9]+");
        if (!std::regex_match(tok, num)) throw UsageError("bad q: " + tok);
        int64_t q = std::stoll(tok);
        int64_t p = 0, t = q;
        for (int64_t d = 2; d * d <= q && !p; ++d)
            if (q % d == 0) p = d;
        if (q < 2) throw UsageError("bad q: " + tok);
        if (!p) p = q;
        while (t % p == 0) t /= p;
        if (t != 1) throw UsageError(tok + " is not a prime power");
        out.push_back(q);
    }
    if (out.empty()) throw UsageError("empty q list");
    return out;
}

namespace {

int char_arg(const FieldCtx& F, const std::string& s) {
    if (!char_name_ok(s)) throw UsageError("unknown character name: " + s);
    return parse_char(F, s);
}

json char_json(const FieldCtx& F, int j) { return json{{"name", char_name(F, j)}, {"j", j}}; }

}  // namespace

json cmd_gauss(const FieldPtr& F, const std::string& ch, bool circle) {
    int j = char_arg(*F, ch);
    const PowerGauss& P = power_gauss(F);
    CycloNum v = circle ? P.gauss_circle(j) : P.gauss(j);
    return json{{"field", field_json(*F)},
                {"char", char_json(*F, j)},
                {"variant", circle ? "circle" : "plain"},
                {"value", cyclo_json(v)}};
}

json cmd_jacobi(const FieldPtr& F, const std::vector<std::string>& chars, bool brute) {
    if (chars.empty()) throw UsageError("jacobi needs at least one character");
    std::vector<int> js;
    json cj = json::array();
    for (const auto& s : chars) {
        js.push_back(char_arg(*F, s));
        cj.push_back(char_json(*F, js.back()));
    }
    CycloNum v = brute ? jacobi_brute(*F, js) : jacobi(F, js);
    return json{{"field", field_json(*F)}, {"chars", cj}, {"method", brute ? "brute" : "gauss"},
                {"value", cyclo_json(v.compress_min())}};
}

json cmd_poch(const FieldPtr& F, const std::string& alpha, const std::string& nu, bool circle) {
    int a = char_arg(*F, alpha), n = char_arg(*F, nu);
    CycloNum v = power_gauss(F).pochhammer(a, n, circle);
    return json{{"field", field_json(*F)},
                {"alpha", char_json(*F, a)},
                {"nu", char_json(*F, n)},
                {"variant", circle ? "circle" : "plain"},
                {"value", cyclo_json(v.compress_min())}};
}

namespace {

ParamMultiset params_arg(const FieldCtx& F, const std::string& csv) {
    std::vector<int> js;
    for (const auto& s : split_csv(csv)) js.push_back(char_arg(F, s));
    return ParamMultiset(F.q - 1, js);
}

json params_json(const FieldCtx& F, const ParamMultiset& A) {
    json a = json::array();
    for (int j : A.idx()) a.push_back(char_json(F, j));
    return a;
}

}  // namespace

json cmd_hyp(const FieldPtr& F, const std::string& num, const std::string& den, const std::string& lambda,
             bool reduced) {
    ParamMultiset A = params_arg(*F, num), B = params_arg(*F, den);
    std::vector<int> ls = parse_lambda(*F, lambda);
    json rows = json::array();
    const GaussAlgebra& G = gauss_algebra(F);
    for (int l : ls) {
        HypValue v;
        if (reduced) {
            v.value = G.to_power(hyp_reduced(G, A, B, l));
            v.conductor = v.value.m();
            v.psi_independent = v.value.in_subfield(F->q - 1);
        } else {
            v = hyp_eval(F, A, B, l);
        }
        json r = hyp_value_json(v);
        r["lambda"] = l;
        rows.push_back(r);
    }
    return json{{"field", field_json(*F)}, {"num", params_json(*F, A)}, {"den", params_json(*F, B)},
                {"reduced", reduced}, {"rows", rows}};
}

json cmd_lauricella(const FieldPtr& F, const std::string& kind, const std::string& params,
                    const std::string& lambdas) {
    LauricellaKind k = parse_lauricella_kind(kind);
    std::vector<int> ps;
    for (const auto& s : split_csv(params)) ps.push_back(char_arg(*F, s));
    std::vector<int> ls = parse_lambda(*F, lambdas);
    CycloNum v = lauricella_eval(F, k, ps, ls);
    json pj = json::array();
    for (int j : ps) pj.push_back(char_json(*F, j));
    return json{{"field", field_json(*F)}, {"kind", kind}, {"params", pj}, {"lambda", ls},
                {"value", cyclo_json(v.compress_min())}};
}

json cmd_kloosterman(const FieldPtr& F, const std::vector<std::string>& chars, const std::string& lambda) {
    std::vector<int> js;
    json cj = json::array();
    for (const auto& s : chars) {
        js.push_back(char_arg(*F, s));
        cj.push_back(char_json(*F, js.back()));
    }
    if (js.empty()) throw UsageError("kloosterman needs at least one character");
    json rows = json::array();
    for (int l : parse_lambda(*F, lambda))
        rows.push_back(json{{"lambda", l}, {"value", cyclo_json(kloosterman(*F, js, l).compress_min())}});
    return json{{"field", field_json(*F)}, {"chars", cj}, {"rows", rows}};
}

VerifyOutcome cmd_verify(const std::vector<std::string>& ids, const std::vector<FieldPtr>& fields,
                         const VerifyMode& mode, int jobs, std::optional<uint64_t> mutate_seed) {
    std::vector<std::string> list;
    for (const auto& id : ids) {
        if (id == "all") {
            auto all = list_identities();
            list.insert(list.end(), all.begin(), all.end());
        } else {
            find_identity(id);
            list.push_back(id);
        }
    }
    VerifyOutcome out;
    json reports = json::array();
    for (const auto& id : list) {
        const IdentityDescriptor& d = find_identity(id);
        for (const auto& F : fields) {
            VerifyReport r = mutate_seed ? verify_mutated(d, F, mode, *mutate_seed) : verify(d, F, mode, jobs);
            if (!r.passed()) ++out.failed;
            reports.push_back(report_json(d, r));
        }
    }
    out.result = json{{"reports", reports}, {"failed_reports", out.failed}};
    if (mutate_seed) out.result["mutate_seed"] = *mutate_seed;
    return out;
}

namespace {

template <class Row, class Fn>
std::vector<Row> sweep(const std::vector<int>& ls, int jobs, Fn fn) {
    std::vector<Row> rows(ls.size());
    std::vector<std::string> errs(ls.size());
    int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (size_t i = 0; i < ls.size(); ++i) {
        try {
            rows[i] = fn(ls[i]);
        } catch (const std::exception& e) {
            errs[i] = e.what();
        }
    }
    for (size_t i = 0; i < ls.size(); ++i)
        if (!errs[i].empty()) throw BadLambda("lambda " + std::to_string(ls[i]) + ": " + errs[i]);
    return rows;
}

}  // namespace

CountOutcome cmd_count(const FieldPtr& F, const std::string& kind, const std::string& lambda, int ext, int jobs) {
    std::vector<int> ls = parse_lambda(*F, lambda, true);
    CountOutcome out;
    json rows = json::array();
    if (kind == "elliptic") {
        auto rs = sweep<EllipticTrace>(ls, jobs, [&](int l) { return elliptic_trace(F, l); });
        for (const auto& r : rs) {
            if (!r.agree || r.a * r.a > 4 * int64_t(F->q)) ++out.disagree;
            json j = elliptic_json(r);
            j["hasse"] = r.a * r.a <= 4 * int64_t(F->q);
            rows.push_back(j);
        }
    } else if (kind == "k3") {
        auto rs = sweep<ZetaK3>(ls, jobs, [&](int l) { return zeta_k3(F, l); });
        std::vector<K3Extension> xs;
        if (ext > 1) xs = sweep<K3Extension>(ls, jobs, [&](int l) { return k3_extension_check(F, l, ext); });
        for (size_t i = 0; i < rs.size(); ++i) {
            json j = k3_json(rs[i]);
            bool ok = rs[i].agree;
            if (ext > 1) {
                j["extension"] = json{{"n", ext}, {"b_naive", xs[i].b_naive}, {"b_predicted", xs[i].b_predicted},
                                      {"agree", xs[i].agree}};
                ok = ok && xs[i].agree;
            }
            if (!ok) ++out.disagree;
            rows.push_back(j);
        }
    } else {
        throw UsageError("count kind must be elliptic or k3");
    }
    out.result = json{{"field", field_json(*F)}, {"kind", kind}, {"rows", rows}, {"disagreements", out.disagree}};
    return out;
}

CountOutcome cmd_dwork(const FieldPtr& F, const std::string& lambda, int jobs) {
    std::vector<int> ls;
    for (int l : parse_lambda(*F, lambda)) {
        if (l == 0) continue;
        int l2 = F->mul(l, l);
        if (F->mul(l2, l2) == 1) {
            if (lambda != "all") throw BadLambda("lambda^4 = 1");
            continue;
        }
        ls.push_back(l);
    }
    CountOutcome out;
    // The extension contexts are built once before the parallel sweep.
    std::vector<DworkReport> rs;
    if (!ls.empty()) {
        DworkReport first = dwork_P(F, ls[0]);
        std::vector<int> rest(ls.begin() + 1, ls.end());
        rs = sweep<DworkReport>(rest, jobs, [&](int l) { return dwork_P(F, l); });
        rs.insert(rs.begin(), first);
    }
    json rows = json::array();
    for (const auto& r : rs) {
        if (!r.matched) ++out.disagree;
        rows.push_back(dwork_json(r));
    }
    out.result = json{{"field", field_json(*F)}, {"rows", rows}, {"mismatches", out.disagree}};
    return out;
}

json cmd_list() {
    json a = json::array();
    for (const auto& id : list_identities()) {
        const auto& d = find_identity(id);
        json slots = json::array();
        for (const auto& s : d.slots) slots.push_back(s.name);
        a.push_back(json{{"id", id}, {"anchor", d.anchor}, {"slots", slots}});
    }
    return a;
}

std::vector<std::pair<std::string, json>> golden_fixtures() {
    std::vector<std::pair<std::string, json>> g;
    auto F3 = build_field_q(3), F5 = build_field_q(5), F7 = build_field_q(7), F9 = build_field_q(9),
         F13 = build_field_q(13);
    g.emplace_back("gauss_q3_phi", cmd_gauss(F3, "phi", false));
    g.emplace_back("gauss_q9_w1_circle", cmd_gauss(F9, "w^1", true));
    g.emplace_back("jacobi_q7_phi_phi", cmd_jacobi(F7, {"phi", "phi"}, false));
    g.emplace_back("poch_q13_sigma_rho", cmd_poch(F13, "sigma", "rho", false));
    g.emplace_back("hyp_q5_phi_phi_e_e", cmd_hyp(F5, "phi,phi", "e,e", "all", false));
    g.emplace_back("hyp_q7_w1_w2_reduced", cmd_hyp(F7, "w^1,w^2", "w^2,e", "g^1,g^2", true));
    g.emplace_back("lauricella_q5_D", cmd_lauricella(F5, "D", "w^1,w^2,phi,w^3", "2,3"));
    g.emplace_back("kloosterman_q7_e_e", cmd_kloosterman(F7, {"e", "e"}, "all"));
    VerifyMode ex;
    g.emplace_back("verify_euler_gauss_q5", strip_timing(cmd_verify({"EULER_GAUSS"}, {F5}, ex, 1).result));
    VerifyMode smp;
    smp.exhaustive = false;
    smp.n = 50;
    smp.seed = 7;
    g.emplace_back("verify_kummer24_q7_sample", strip_timing(cmd_verify({"KUMMER24"}, {F7}, smp, 1).result));
    g.emplace_back("verify_quartic_q7_skipped", strip_timing(cmd_verify({"QUARTIC_COR"}, {F7}, ex, 1).result));
    g.emplace_back("count_elliptic_q13", cmd_count(F13, "elliptic", "all", 1, 1).result);
    g.emplace_back("count_k3_q5_ext2", cmd_count(F5, "k3", "all", 2, 1).result);
    g.emplace_back("dwork_q9", cmd_dwork(F9, "all", 1).result);
    g.emplace_back("list", cmd_list());
    return g;
}

}  // namespace hgff
