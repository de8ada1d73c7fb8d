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

#include "hgff/errors.hpp"
#include "hgff/field.hpp"

using namespace hgff;

TEST_SUITE("field") {

TEST_CASE("small prime fields") {
    auto F3 = build_field(3, 1);
    CHECK(F3->q == 3);
    CHECK(F3->generator == 2);
    auto F7 = build_field(7, 1);
    CHECK(F7->generator == 3);
    CHECK(F7->dlog(2) == 2);
    CHECK(F7->dlog(6) == 3);
    CHECK(F7->dlog(1) == 0);
    CHECK(F7->dlog(F7->generator) == 1);
}

TEST_CASE("F_9 modulus is the smallest monic irreducible quadratic") {
    auto F = build_field(3, 2);
    // x^2 + 1: x^2, x^2+2 (=(x-1)(x+1)), ... first without roots mod 3
    CHECK(F->modulus == std::vector<int>{1, 0, 1});
    CHECK(F->trace(1) == 2);
    // x itself, code 3: Tr(x) = x + x^3
    int x = 3;
    CHECK(F->trace(x) == F->add(x, F->pow(x, 3)));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(build_field(4, 1), NonPrimeP);
    CHECK_THROWS_AS(build_field_q(12), NonPrimeP);
    CHECK_THROWS_AS(build_field(2, 40), BoundExceeded);
    auto F = build_field(5, 1);
    CHECK_THROWS_AS(F->dlog(0), ZeroHasNoDlog);
}

TEST_CASE("generator order and dlog table") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 125}) {
        auto F = build_field_q(q);
        int x = 1;
        for (int i = 0; i < q - 1; ++i) {
            CHECK(F->dlog(x) == i);
            x = F->mul(x, F->generator);
            if (i < q - 2) CHECK(x != 1);
        }
        CHECK(x == 1);
    }
}

TEST_CASE("dlog is a homomorphism, trace is linear and Frobenius invariant") {
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        auto F = build_field_q(q);
        bool onto = false;
        for (int x = 0; x < q; ++x) {
            onto = onto || F->trace(x) != 0;
            CHECK(F->trace(F->pow(x, F->p)) == F->trace(x));
            for (int y = 0; y < q; ++y) {
                CHECK(F->trace(F->add(x, y)) == (F->trace(x) + F->trace(y)) % F->p);
                if (x && y) CHECK(F->dlog(F->mul(x, y)) == (F->dlog(x) + F->dlog(y)) % (q - 1));
            }
        }
        CHECK(onto);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(3);
    for (int q : {16, 25, 27, 49, 121}) {
        auto F = build_field_q(q);
        std::uniform_int_distribution<int> d(0, q - 1);
        for (int i = 0; i < 300; ++i) {
            int a = d(rng), b = d(rng), c = d(rng);
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->sub(F->add(a, b), b) == a);
        }
    }
}

TEST_CASE("embedding and norm") {
    for (auto [q, l] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {2, 3}, {3, 3}, {5, 2}, {9, 2}, {4, 2}}) {
        auto K = build_field_q(q);
        auto E = build_field(K->p, K->e * l);
        FieldEmbedding emb(K, E);
        CHECK(emb.embed(1) == 1);
        CHECK(emb.norm(0) == 0);
        CHECK(emb.norm(1) == 1);
        for (int x = 0; x < K->q; ++x) {
            CHECK(emb.restrict_to_base(emb.embed(x)) == x);
            CHECK(emb.norm(emb.embed(x)) == K->pow(x, l));
            for (int y = 0; y < K->q; ++y) {
                CHECK(emb.embed(K->add(x, y)) == E->add(emb.embed(x), emb.embed(y)));
                CHECK(emb.embed(K->mul(x, y)) == E->mul(emb.embed(x), emb.embed(y)));
            }
        }
        if (E->q <= 81)
            for (int x = 1; x < E->q; ++x) {
                CHECK(emb.norm(x) != 0);
                for (int y = 1; y < E->q; y += 3) CHECK(emb.norm(E->mul(x, y)) == K->mul(emb.norm(x), emb.norm(y)));
            }
    }
    // N(G) = g for F_9 / F_3
    auto K = build_field(3, 1);
    auto E = build_field(3, 2);
    FieldEmbedding emb(K, E);
    CHECK(emb.norm(E->generator) == K->generator);
}

TEST_CASE("rebuilding gives identical tables") {
    auto a = build_field(3, 3), b = build_field(3, 3);
    CHECK(a->modulus == b->modulus);
    CHECK(a->generator == b->generator);
    CHECK(a->dlog_table() == b->dlog_table());
    CHECK(a->trace_table() == b->trace_table());
}

}
