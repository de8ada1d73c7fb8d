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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "hgff/errors.hpp"
#include "hgff/identities.hpp"
#include "hgff/json_io.hpp"
#include "identity_util.hpp"

using namespace hgff;

namespace {

bool same_report(const VerifyReport& a, const VerifyReport& b) {
    if (a.cases_checked != b.cases_checked || a.skipped != b.skipped || a.failures.size() != b.failures.size())
        return false;
    for (size_t i = 0; i < a.failures.size(); ++i)
        if (a.failures[i].key != b.failures[i].key) return false;
    return true;
}

void sweep(int q) {
    auto F = build_field_q(q);
    for (const auto& d : identity_registry()) {
        if (d.id == "SUM_REPRESENTATION" && q > 7) continue;
        VerifyReport r = verify(d, F, VerifyMode{});
        INFO(d.id << " q=" << q);
        CHECK(r.passed());
        if (!r.skipped) CHECK(r.skip_reason.empty());
    }
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("registry") {
    const auto& reg = identity_registry();
    CHECK(reg.size() >= 38);
    auto ids = list_identities();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    for (const auto& d : reg) {
        CHECK(!d.anchor.empty());
        CHECK(d.lhs);
        CHECK(d.rhs);
        CHECK(&find_identity(d.id) == &d);
    }
    CHECK_THROWS_AS(find_identity("NOPE"), UnknownIdentity);
}

TEST_CASE("hypothesis helpers") {
    using namespace hgff::reg;
    const IdCtx& c = id_ctx(build_field_q(13));
    CHECK(canon({1, 2, 2, 0}, 0, 3, 4));
    CHECK_FALSE(canon({2, 1, 0, 0}, 0, 2, 4));
    CHECK_FALSE(canon({1, 2, 0, 5}, 0, 2, 4));
    CHECK(canon({9, 3, 4, 0}, 1, 2, 3));
    CHECK(take({5, 6, 7, 8}, 1, 2) == std::vector<int>{6, 7});
    CHECK(unused({0, 3, 0}, {0, 2}));
    CHECK_FALSE(unused({0, 3, 0}, {1}));
    CHECK(pair_idx(c, {1, 13}, {1}) == 2);
    CHECK(pair_idx(c, {0, 6}, {4, 3}) == 0);
    CHECK(same_multiset(c, {3, 1, 12}, {0, 3, 1}));
    CHECK(shifted(c, {11, 2}, 3) == std::vector<int>{2, 5});
    CHECK(conj(c, {0, 5}) == std::vector<int>{0, 7});
    CHECK(shape_names().size() == 9);
    // x = 3: (1-3)/(1+3) = -1/2 = 6 mod 13, and 1 - 6^2 = -35 = 4
    CHECK(quad_arg(c, c.el(3), 2) == c.el(4));
    CHECK(c.phi() == 6);
    CHECK(id_ctx(build_field_q(8)).phi() == -1);
    CHECK(c.chars_of_order(4) == std::vector<int>{3, 9});
    CHECK(c.roots_of_unity(3) == std::vector<int>{0, 4, 8});
}

TEST_CASE("case space") {
    auto F = build_field_q(7);
    const auto& d = find_identity("EULER_GAUSS");
    CaseSpace s = case_space(d, *F);
    for (uint64_t k = 0; k < s.size(); k += 7) {
        Binding b = s.decode(k);
        CHECK(b.size() == d.slots.size());
    }
    CHECK_THROWS_AS(case_space(find_identity("QUARTIC_COR"), *F), UnsatisfiableInField);
    VerifyReport r = verify(find_identity("QUARTIC_COR"), F, VerifyMode{});
    CHECK(r.skipped);
    CHECK(!r.skip_reason.empty());
    CHECK(r.passed());
}

TEST_CASE("sampling is seeded and without replacement") {
    auto F = build_field_q(13);
    const auto& d = find_identity("THOMAE");
    VerifyMode m{false, 50, 11};
    auto a = enumerate_cases(d, F, m), b = enumerate_cases(d, F, m);
    CHECK(a == b);
    CHECK(a.size() == 50);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    m.seed = 12;
    CHECK(enumerate_cases(d, F, m) != a);
    // n beyond the admissible count gives everything
    auto all = enumerate_cases(find_identity("BASIC_0F0"), F, VerifyMode{});
    auto big = enumerate_cases(find_identity("BASIC_0F0"), F, VerifyMode{false, 100000, 3});
    CHECK(all == big);
}

TEST_CASE("parallel verify matches the serial reference") {
    for (int q : {7, 9}) {
        auto F = build_field_q(q);
        for (const char* id : {"EULER_GAUSS", "SAALSCHUTZ", "REVERSAL", "QUAD_I", "CLAUSEN", "DH_MULT"}) {
            const auto& d = find_identity(id);
            for (VerifyMode m : {VerifyMode{}, VerifyMode{false, 30, 5}}) {
                VerifyReport p = verify(d, F, m), s = verify_serial(d, F, m);
                INFO(id << " q=" << q);
                CHECK(same_report(p, s));
                CHECK(dump(strip_timing(report_json(d, p))) == dump(strip_timing(report_json(d, s))));
            }
        }
    }
}

TEST_CASE("reports are byte-identical across runs") {
    auto F = build_field_q(13);
    const auto& d = find_identity("KUMMER24");
    VerifyMode m{false, 80, 2};
    std::string a = dump(strip_timing(report_json(d, verify(d, F, m, 1))));
    std::string b = dump(strip_timing(report_json(d, verify(d, F, m))));
    CHECK(a == b);
    CHECK(a.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("mutations are detected") {
    auto F = build_field_q(13);
    const IdCtx& c = id_ctx(F);
    int seed = 1;
    // not DH_MULT: alpha -> alpha f with f^n = e is a genuine symmetry of both sides
    for (const char* id : {"EULER_GAUSS", "SAALSCHUTZ", "DIXON", "WATSON", "KUMMER24", "THOMAE", "QUAD_I",
                           "CLAUSEN", "NEARLY_3F2", "WHIPPLE_3F2", "PFAFF_TRANSFORM", "ITERATION_JACOBI"}) {
        const auto& d = find_identity(id);
        Mutation m = random_mutation(d, F, seed++);
        INFO(std::string(id));
        CHECK(m.slot >= 0);
        CHECK(m.binding[m.slot] != m.value);
        CHECK(mutation_detected(d, c, m));
        VerifyReport r = verify_mutated(d, F, VerifyMode{false, 20, 3}, 9);
        CHECK_FALSE(r.passed());
    }
}

TEST_CASE("values compare across representations") {
    auto F = build_field_q(7);
    const IdCtx& c = id_ctx(F);
    Value g = c.gauss(2) * c.gauss(4);
    Value p = value_power(c, g);
    CHECK(values_equal(c, g, p));
    CHECK(values_equal(c, Value(c.num(3)), Value(CycloNum::integer(6, 3))));
    CHECK(values_equal(c, g, Value(CycloNum::integer(6, 7))));  // chi(-1) q
    CHECK_FALSE(values_equal(c, g, Value(CycloNum::integer(6, 8))));
}

TEST_CASE("FOURIER_PRODUCT_LEMMA with the deg(A+B) sign fails for one-sided shapes") {
    auto F = build_field_q(7);
    const IdCtx& c = id_ctx(F);
    const auto& d = find_identity("FOURIER_PRODUCT_LEMMA");
    // shape 1/0,1/1: deg(A+B) = 1, deg(A'+B') = 2
    int wrong = 0, total = 0;
    for (int a = 1; a < 6; ++a)
        for (int a2 = 1; a2 < 6; ++a2)
            for (int nu = 0; nu < 6; ++nu) {
                Binding b{1, a, 0, a2, 4, nu};
                if (!d.hypothesis(c, b)) continue;
                ++total;
                CHECK(values_equal(c, d.lhs(c, b), d.rhs(c, b)));
                const GaussAlgebra& G = c.G();
                Graded k = Graded(G, G.poch(a2, nu)) * Graded(G, G.inv_poch_circle(4, nu));
                Graded stated = -(k * c.hyp({a, c.md(-4 - nu)}, {c.md(-a2 - nu)}, c.neg(1)));
                if (!values_equal(c, d.lhs(c, b), stated)) ++wrong;
            }
    CHECK(total > 0);
    CHECK(wrong > 0);
}

TEST_CASE("NEARLY_4F3 with the /q tail fails") {
    auto F = build_field_q(7);
    const IdCtx& c = id_ctx(F);
    const auto& d = find_identity("NEARLY_4F3");
    int wrong = 0, total = 0;
    for (uint64_t key : enumerate_cases(d, F, VerifyMode{false, 60, 4})) {
        Binding b = case_space(d, *F).decode(key);
        if (b[0] != 0) continue;
        ++total;
        Graded tail = c.frac({gc(-b[2]), gc(-b[3]), gc(-b[4])}, {});
        Graded ours = d.rhs(c, b).g;
        Graded stated = ours + c.chi(-b[1], c.el(4)) * tail.scale(1, 49) - tail.scale(1, 7);
        CHECK(values_equal(c, d.lhs(c, b), ours));
        if (!values_equal(c, d.lhs(c, b), stated)) ++wrong;
    }
    CHECK(total > 0);
    CHECK(wrong == total);
}

TEST_CASE("exhaustive sweep q = 3, 4, 5") {
    for (int q : {3, 4, 5}) sweep(q);
}

TEST_CASE("exhaustive sweep q = 7") { sweep(7); }
TEST_CASE("exhaustive sweep q = 8") { sweep(8); }
TEST_CASE("exhaustive sweep q = 9") { sweep(9); }

}
