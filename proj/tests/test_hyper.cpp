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

#include <random>

#include "hgff/characters.hpp"
#include "hgff/errors.hpp"
#include "hgff/hyper.hpp"

using namespace hgff;

namespace {

CycloNum val(const FieldPtr& F, const std::vector<int>& a, const std::vector<int>& b, int l) {
    return hyp_eval(F, ParamMultiset(F->q - 1, a), ParamMultiset(F->q - 1, b), l).value;
}

// Every multiset of degree d over Z/N as a sorted vector.
void multisets(int N, int d, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == d) {
        out.push_back(cur);
        return;
    }
    for (int j = lo; j < N; ++j) {
        cur.push_back(j);
        multisets(N, d, j, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multisets(int N, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets(N, d, 0, cur, out);
    return out;
}

bool oracle_ok(const std::vector<int>& a, std::vector<int> b) {
    std::sort(b.begin(), b.end());
    do {
        bool ok = true;
        for (size_t i = 0; i < a.size(); ++i) ok = ok && a[i] != b[i];
        if (ok) return true;
    } while (std::next_permutation(b.begin(), b.end()));
    return false;
}

}  // namespace

TEST_SUITE("hyper") {

TEST_CASE("parameter multisets and pairing") {
    ParamMultiset A(12, {3, 1, 1}), B(12, {1, 5});
    CHECK(A.idx() == std::vector<int>{1, 1, 3});
    CHECK(A.deg() == 3);
    CHECK(pairing(A, B) == 2);
    CHECK(pairing(A, 1) == 2);
    CHECK(pairing(A, ParamMultiset(12, {1, 1})) == 4);
    CHECK(A.shift(11).idx() == std::vector<int>{0, 0, 2});
    CHECK(A.conj().idx() == std::vector<int>{9, 11, 11});
    CHECK((A + B).deg() == 5);
    CHECK((A - ParamMultiset(12, {1})).idx() == std::vector<int>{1, 3});
    CHECK_THROWS(A - ParamMultiset(12, {2}));
    // (alpha + phi, e + gamma) style checks on hand-built multisets
    CHECK(pairing(ParamMultiset(12, {2, 6}), ParamMultiset(12, {0, 4})) == 0);
    CHECK(pairing(ParamMultiset(12, {2, 6}), ParamMultiset(12, {0, 6})) == 1);
    CHECK(pairing(ParamMultiset(12, {0, 0}), ParamMultiset(12, {0})) == 2);
}

TEST_CASE("reduce_params") {
    auto r = reduce_params(ParamMultiset(6, {0}), ParamMultiset(6, {0}));
    CHECK(r.a.deg() == 0);
    CHECK(r.b.deg() == 0);
    CHECK(r.gamma.idx() == std::vector<int>{0});
    r = reduce_params(ParamMultiset(6, {1, 2}), ParamMultiset(6, {3, 4}));
    CHECK(r.gamma.deg() == 0);
    // A = alpha + phi, B = phi + e
    r = reduce_params(ParamMultiset(6, {1, 3}), ParamMultiset(6, {3, 0}));
    CHECK(r.gamma.idx() == std::vector<int>{3});
    CHECK(r.a.idx() == std::vector<int>{1});
    CHECK(r.b.idx() == std::vector<int>{0});
}

TEST_CASE("closed forms") {
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        auto F = build_field_q(q);
        const int N = q - 1;
        for (int l = 0; l < q; ++l) {
            CHECK(val(F, {}, {}, l) == CycloNum::integer(N, l == 1 ? -1 : 0));
            if (l == 0) {
                CHECK(val(F, {}, {0}, l).is_zero());
                continue;
            }
            CHECK(val(F, {}, {0}, l) == psi_eval(*F, F->neg(l)));
            for (int a = 1; a < N; ++a) CHECK(val(F, {a}, {0}, l) == char_eval(*F, N - a, F->sub(1, l)));
        }
    }
}

TEST_CASE("cached and reference evaluation agree") {
    for (int q : {5, 7, 8, 9}) {
        auto F = build_field_q(q);
        const GaussAlgebra& G = gauss_algebra(F);
        const int N = q - 1;
        for (const auto& a : multisets(N, 2))
            for (const auto& b : multisets(N, 1))
                for (int l = 0; l < q; l += 2) {
                    ParamMultiset A(N, a), B(N, b);
                    CHECK(hyp_graded(G, A, B, l) == hyp_graded_reference(G, A, B, l));
                }
    }
}

TEST_CASE("parallel table matches the serial reference") {
    for (int q : {9, 13, 16}) {
        auto F = build_field_q(q);
        const GaussAlgebra& G = gauss_algebra(F);
        const int N = q - 1;
        std::mt19937_64 rng(q);
        for (int t = 0; t < 6; ++t) {
            ParamMultiset A(N, {int(rng() % N), int(rng() % N), int(rng() % N)});
            ParamMultiset B(N, {0, int(rng() % N), int(rng() % N)});
            auto par = hyp_table(G, A, B), one = hyp_table(G, A, B, 1), ser = hyp_table_serial(G, A, B);
            REQUIRE(par.size() == size_t(q));
            for (int l = 0; l < q; ++l) {
                CHECK(par[l] == ser[l]);
                CHECK(one[l] == ser[l]);
            }
        }
    }
}

TEST_CASE("oracle equivalence, d <= 2, q <= 11") {
    for (int q : {3, 4, 5, 7, 8, 9, 11}) {
        auto F = build_field_q(q);
        const int N = q - 1;
        for (int d = 1; d <= 2; ++d)
            for (const auto& a : multisets(N, d))
                for (const auto& b : multisets(N, d)) {
                    if (!oracle_ok(a, b)) {
                        CHECK_THROWS_AS(hyp_eval_oracle(F, ParamMultiset(N, a), ParamMultiset(N, b), 1), PairingViolation);
                        continue;
                    }
                    for (int l = 0; l < q; ++l)
                        CHECK(val(F, a, b, l) ==
                              hyp_eval_oracle(F, ParamMultiset(N, a), ParamMultiset(N, b), l));
                }
    }
}

TEST_CASE("oracle equivalence, d = 3, q = 5 and sampled q = 7") {
    std::mt19937_64 rng(4);
    for (int q : {5, 7}) {
        auto F = build_field_q(q);
        const int N = q - 1;
        auto ms = multisets(N, 3);
        for (const auto& a : ms)
            for (const auto& b : ms) {
                if (!oracle_ok(a, b)) continue;
                if (q == 7 && rng() % 8) continue;
                for (int l = 0; l < q; ++l)
                    CHECK(val(F, a, b, l) == hyp_eval_oracle(F, ParamMultiset(N, a), ParamMultiset(N, b), l));
            }
    }
    auto F5 = build_field_q(5);
    CHECK(val(F5, {2, 2, 2}, {0, 0, 0}, 2) == hyp_eval_oracle(F5, ParamMultiset(4, {2, 2, 2}), ParamMultiset(4, {0, 0, 0}), 2));
}

TEST_CASE("psi independence of balanced values") {
    psi_audit_reset();
    for (int q : {4, 5, 7, 9}) {
        auto F = build_field_q(q);
        const int N = q - 1;
        for (const auto& a : multisets(N, 2))
            for (const auto& b : multisets(N, 2))
                for (int l = 0; l < q; ++l) {
                    HypValue v = hyp_eval(F, ParamMultiset(N, a), ParamMultiset(N, b), l);
                    CHECK(v.psi_independent);
                    CHECK(v.value.in_subfield(N));
                }
        // unbalanced values generally are not (psi is rational when p = 2)
        if (F->p == 2) continue;
        int x = 1;
        while (F->trace(F->neg(x)) == 0) ++x;
        CHECK_FALSE(val(F, {}, {0}, x).in_subfield(N));
    }
    CHECK(psi_audit().violations == 0);
}

TEST_CASE("lauricella: n = 1 is 2F1 for every kind") {
    auto F = build_field_q(5);
    const int N = 4;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int l = 0; l < 5; ++l) {
                    CycloNum want = val(F, {a, b}, {0, c}, l);
                    for (auto k : {LauricellaKind::A, LauricellaKind::B, LauricellaKind::C, LauricellaKind::D})
                        CHECK(lauricella_eval(F, k, {a, b, c}, {l}) == want);
                }
}

TEST_CASE("lauricella: F_D at zero, arity, F_A n = 2 brute force") {
    auto F = build_field_q(5);
    CHECK(lauricella_eval(F, LauricellaKind::D, {1, 2, 3, 1}, {0, 0}).is_zero());
    CHECK_THROWS_AS(lauricella_eval(F, LauricellaKind::A, {1, 2, 3}, {2, 3}), ArityMismatch);
    CHECK_THROWS_AS(parse_lauricella_kind("E"), UsageError);
    const PowerGauss& P = power_gauss(F);
    const int N = 4, m = P.conductor();
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> p(5);
        for (int& x : p) x = int(rng() % N);
        int l1 = 1 + int(rng() % 4), l2 = 1 + int(rng() % 4);
        // independent double sum in the power basis
        CycloNum s(m);
        for (int n1 = 0; n1 < N; ++n1)
            for (int n2 = 0; n2 < N; ++n2) {
                CycloNum term = P.pochhammer(p[0], n1 + n2, false) * P.pochhammer(p[1], n1, false) *
                                P.pochhammer(p[2], n2, false);
                term /= P.pochhammer(0, n1, true) * P.pochhammer(0, n2, true) * P.pochhammer(p[3], n1, true) *
                        P.pochhammer(p[4], n2, true);
                term *= char_eval(*F, n1, l1) * char_eval(*F, n2, l2);
                s += term;
            }
        s = s.scale(1, 16);
        CycloNum got = lauricella_eval(F, LauricellaKind::A, p, {l1, l2});
        CHECK(got == s);
        CHECK(got.in_subfield(N));
    }
}

TEST_CASE("kloosterman") {
    // d = 1: psi(lambda) alpha(lambda)
    auto F5 = build_field_q(5);
    for (int a = 0; a < 4; ++a)
        for (int l = 1; l < 5; ++l) CHECK(kloosterman(*F5, {a}, l) == psi_eval(*F5, l) * char_eval(*F5, a, l));
    // classical sum over F_3: psi(2) + psi(1) = -1
    auto F3 = build_field_q(3);
    CHECK(kloosterman(*F3, {0, 0}, 1) == CycloNum::integer(6, -1));
    CHECK_THROWS_AS(kloosterman(*F3, {}, 1), ArityMismatch);
}

}
