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

// hgff: command-line front end. Exit 0 ok, 1 verification failures or
// disagreeing counts, 2 usage errors, 3 internal errors.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hgff/commands.hpp"
#include "hgff/errors.hpp"

using namespace hgff;

namespace {

struct Opts {
    std::string q = "5", chr = "phi", chars, alpha = "e", nu = "e", num, den, lambda = "all", kind, params, id = "all",
                mode = "exhaustive", json_out = "-", out_dir = "golden";
    bool circle = false, brute = false, reduced = false;
    uint64_t n = 200, seed = 1;
    int64_t mutate = -1;
    int jobs = 0, ext = 1;
};

void emit(const std::string& path, const json& j) {
    std::string s = dump(j) + "\n";
    if (path == "-") {
        std::fwrite(s.data(), 1, s.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << s;
}

void check_chars(const std::vector<std::string>& names) {
    for (const auto& s : names)
        if (!char_name_ok(s)) throw UsageError("unknown character name: " + s);
}

FieldPtr one_field(const std::string& q) {
    auto qs = parse_q_list(q);
    if (qs.size() != 1) throw UsageError("this subcommand takes a single --q");
    return build_field_q(qs[0]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergeometric functions over finite fields"};
    app.require_subcommand(1);
    Opts o;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--q", o.q, "field size (or comma list where allowed)");
        s->add_option("--json", o.json_out, "output path, - for stdout");
        s->add_option("--jobs", o.jobs, "worker threads, 0 = default");
    };

    auto* gauss = app.add_subcommand("gauss", "Gauss sum g(chi)");
    add_common(gauss);
    gauss->add_option("--char", o.chr, "e, phi, sigma, rho or w^j");
    gauss->add_flag("--circle", o.circle, "g° instead of g");

    auto* jac = app.add_subcommand("jacobi", "Jacobi sum j(chi_1, ..., chi_n)");
    add_common(jac);
    jac->add_option("--chars", o.chars, "comma list")->required();
    jac->add_flag("--brute", o.brute, "direct summation");

    auto* poch = app.add_subcommand("poch", "Pochhammer symbol (alpha)_nu");
    add_common(poch);
    poch->add_option("--alpha", o.alpha);
    poch->add_option("--nu", o.nu);
    poch->add_flag("--circle", o.circle);

    auto* hyp = app.add_subcommand("hyp", "F(A, B; lambda)");
    add_common(hyp);
    hyp->add_option("--num", o.num, "numerator characters, comma list");
    hyp->add_option("--den", o.den, "denominator characters, comma list");
    hyp->add_option("--lambda", o.lambda, "code, g^k, comma list or all");
    hyp->add_flag("--reduced", o.reduced, "evaluate the reduced pair");

    auto* lau = app.add_subcommand("lauricella", "Lauricella F_A..F_D");
    add_common(lau);
    lau->add_option("--kind", o.kind)->required();
    lau->add_option("--params", o.params)->required();
    lau->add_option("--lambda", o.lambda, "comma list, one per variable")->required();

    auto* klo = app.add_subcommand("kloosterman", "generalized Kloosterman sum");
    add_common(klo);
    klo->add_option("--chars", o.chars)->required();
    klo->add_option("--lambda", o.lambda);

    auto* ver = app.add_subcommand("verify", "sweep registered identities");
    add_common(ver);
    ver->add_option("--id", o.id, "identity id, comma list or all");
    ver->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "sample"}));
    ver->add_option("--n", o.n, "sample size");
    ver->add_option("--seed", o.seed);
    ver->add_option("--mutate", o.mutate, "evaluate every rhs at a mutated case (seed)");

    auto* cnt = app.add_subcommand("count", "elliptic traces and K3 counts");
    add_common(cnt);
    cnt->add_option("--kind", o.kind)->check(CLI::IsMember({"elliptic", "k3"}))->required();
    cnt->add_option("--lambda", o.lambda);
    cnt->add_option("--ext", o.ext, "also recount b over the degree-n extension");

    auto* dw = app.add_subcommand("dwork", "cubic factor of the Dwork K3");
    add_common(dw);
    dw->add_option("--lambda", o.lambda);

    auto* lst = app.add_subcommand("list", "registered identities");
    lst->add_option("--json", o.json_out);

    auto* gold = app.add_subcommand("golden", "write the golden fixture set");
    gold->add_option("--out", o.out_dir, "directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto ms = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count(); };
    CLI::App* sub = app.get_subcommands().front();
    json cmd{{"name", sub->get_name()}, {"argv", std::vector<std::string>(argv + 1, argv + argc)}};
    int rc = 0;
    try {
        json result;
        if (sub == gauss) {
            check_chars({o.chr});
            result = cmd_gauss(one_field(o.q), o.chr, o.circle);
        } else if (sub == jac) {
            check_chars(split_csv(o.chars));
            result = cmd_jacobi(one_field(o.q), split_csv(o.chars), o.brute);
        } else if (sub == poch) {
            check_chars({o.alpha, o.nu});
            result = cmd_poch(one_field(o.q), o.alpha, o.nu, o.circle);
        } else if (sub == hyp) {
            check_chars(split_csv(o.num));
            check_chars(split_csv(o.den));
            result = cmd_hyp(one_field(o.q), o.num, o.den, o.lambda, o.reduced);
        } else if (sub == lau) {
            check_chars(split_csv(o.params));
            result = cmd_lauricella(one_field(o.q), o.kind, o.params, o.lambda);
        } else if (sub == klo) {
            check_chars(split_csv(o.chars));
            result = cmd_kloosterman(one_field(o.q), split_csv(o.chars), o.lambda);
        } else if (sub == ver) {
            std::vector<FieldPtr> fs;
            for (auto q : parse_q_list(o.q)) fs.push_back(build_field_q(q));
            VerifyMode m;
            m.exhaustive = o.mode == "exhaustive";
            m.n = o.n;
            m.seed = o.seed;
            std::optional<uint64_t> mut;
            if (o.mutate >= 0) mut = uint64_t(o.mutate);
            auto v = cmd_verify(split_csv(o.id), fs, m, o.jobs, mut);
            result = v.result;
            rc = v.failed ? 1 : 0;
        } else if (sub == cnt) {
            auto c = cmd_count(one_field(o.q), o.kind, o.lambda, o.ext, o.jobs);
            result = c.result;
            rc = c.disagree ? 1 : 0;
        } else if (sub == dw) {
            auto c = cmd_dwork(one_field(o.q), o.lambda, o.jobs);
            result = c.result;
            rc = c.disagree ? 1 : 0;
        } else if (sub == lst) {
            result = cmd_list();
        } else if (sub == gold) {
            namespace fs = std::filesystem;
            fs::create_directories(o.out_dir);
            json manifest = json::array();
            for (const auto& [name, payload] : golden_fixtures()) {
                emit((fs::path(o.out_dir) / (name + ".json")).string(), payload);
                manifest.push_back(name);
            }
            emit((fs::path(o.out_dir) / "MANIFEST.json").string(), manifest);
            result = json{{"dir", o.out_dir}, {"fixtures", manifest}};
            o.json_out = "-";
        }
        emit(o.json_out, envelope(cmd, result, ms()));
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const NonPrimeP& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownIdentity& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BadLambda& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        json diag{{"error", e.kind()}, {"message", e.what()}};
        emit("-", envelope(cmd, diag, ms()));
        return 3;
    } catch (const std::exception& e) {
        json diag{{"error", "internal"}, {"message", e.what()}};
        emit("-", envelope(cmd, diag, ms()));
        return 3;
    }
    return rc;
}
