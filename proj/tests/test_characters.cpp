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

#include "hgff/characters.hpp"
#include "hgff/field.hpp"

using namespace hgff;

namespace {

const std::vector<int> kQs{3, 4, 5, 7, 8, 9, 11, 13};

CycloNum I(int m, int64_t v) { return CycloNum::integer(m, v); }

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("char_eval") {
    auto F = build_field_q(7);
    CHECK(char_eval(*F, 0, 3) == I(6, 1));
    CHECK(char_eval(*F, 2, 0).is_zero());
    CHECK(char_eval(*F, char_quadratic(*F), 2) == I(6, 1));
    CHECK(char_eval(*F, char_quadratic(*F), 3) == I(6, -1));
}

TEST_CASE("character names") {
    auto F = build_field_q(13);
    CHECK(parse_char(*F, "e") == 0);
    CHECK(parse_char(*F, "phi") == 6);
    CHECK(parse_char(*F, "sigma") == 3);
    CHECK(parse_char(*F, "rho") == 4);
    CHECK(parse_char(*F, "w^-1") == 11);
    CHECK(char_name(*F, 6) == "phi");
    CHECK_THROWS(parse_char(*F, "tau"));
    CHECK_THROWS(parse_char(*build_field_q(7), "sigma"));
}

TEST_CASE("gauss sum examples") {
    auto F3 = build_field_q(3);
    const PowerGauss& P = power_gauss(F3);
    CHECK(P.gauss(0) == I(6, 1));
    CHECK(P.gauss_circle(0) == I(6, 3));
    // -z3 + z3^2 from the two-term sum
    CHECK(P.gauss(1) == -CycloNum::root(3, 1) + CycloNum::root(3, 2));
    auto z = P.gauss(1).embed();
    CHECK(std::abs(z.real()) < 1e-9);
    CHECK(std::abs(std::abs(z.imag()) - std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("jacobi examples") {
    CHECK(jacobi(build_field_q(5), {0, 0}) == I(4, -3));
    CHECK(jacobi_brute(*build_field_q(5), {0, 0}) == I(4, -3));
    auto F7 = build_field_q(7);
    CHECK(jacobi(F7, {3, 3}) == I(6, -1));
    for (int j = 0; j < 6; ++j) CHECK(jacobi(F7, {j}) == I(6, 1));
}

TEST_CASE("orthogonality") {
    for (int q : kQs) {
        auto F = build_field_q(q);
        for (int j = 0; j < q - 1; ++j) {
            CycloNum s(q - 1);
            for (int x = 1; x < q; ++x) s += char_eval(*F, j, x);
            CHECK(s == I(q - 1, j == 0 ? q - 1 : 0));
        }
        CycloNum t(psi_conductor(*F));
        for (int x = 0; x < q; ++x) t += psi_eval(*F, x);
        CHECK(t.is_zero());
        int x = 1;
        while (F->trace(x) == 0) ++x;
        CHECK(psi_eval(*F, x) != I(psi_conductor(*F), 1));
        CHECK(psi_eval(*F, 0) == I(psi_conductor(*F), 1));
    }
}

TEST_CASE("gauss sums: conjugation, reflection, absolute value") {
    for (int q : kQs) {
        auto F = build_field_q(q);
        const PowerGauss& P = power_gauss(F);
        const int m = P.conductor();
        CycloNum tab(m), tab_galois(m);
        for (int j = 0; j < q - 1; ++j) {
            CycloNum sign = char_eval(*F, j, F->neg(1));
            CycloNum g = P.gauss(j), gb = P.gauss(-j);
            CHECK(g.conj() == sign * gb);
            CHECK(P.gauss_circle(j).conj() == sign * P.gauss_circle(-j));
            CHECK(g * P.gauss_circle(-j) == sign * I(m, q));
            CHECK(g == gauss_direct(*F, j));
            if (j) CHECK(g * sign * gb == I(m, q));
            tab += g * gb * sign;
            tab_galois += g * g.conj();
        }
        CHECK(tab == I(m, (q - 2) * q + 1));
        CHECK(tab_galois == I(m, (q - 2) * q + 1));
    }
}

TEST_CASE("jacobi: Gauss quotient equals brute force, n <= 3, q <= 11") {
    for (int q : {3, 4, 5, 7, 8, 9, 11}) {
        auto F = build_field_q(q);
        const int N = q - 1;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                CHECK(jacobi(F, {a, b}) == jacobi_brute(*F, {a, b}));
                CHECK(jacobi2_brute(*F, a, b) == jacobi_brute(*F, {a, b}));
                for (int c = 0; c < N; c += (q > 7 ? 3 : 1)) CHECK(jacobi(F, {a, b, c}) == jacobi_brute(*F, {a, b, c}));
            }
        // all-trivial branch: (1 - (1-q)^n) / q
        for (int n = 1; n <= 3; ++n) {
            Integer t = 1;
            for (int i = 0; i < n; ++i) t *= Integer(1 - q);
            CHECK(jacobi(F, std::vector<int>(n, 0)) == CycloNum::rational(N, Integer(1) - t, q));
        }
    }
}

TEST_CASE("pochhammer identities") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        auto F = build_field_q(q);
        const PowerGauss& P = power_gauss(F);
        const int N = q - 1, m = P.conductor();
        for (int a = 0; a < N; ++a) {
            CHECK(P.pochhammer(a, 0, false) == I(m, 1));
            CHECK(P.pochhammer(a, 0, true) == I(m, 1));
            for (int n = 0; n < N; ++n) {
                if (a == 0) {
                    CHECK(P.pochhammer(0, n, false) == P.gauss(n));
                    CHECK(P.pochhammer(0, n, true) == P.gauss_circle(n).scale(1, q));
                }
                CHECK(P.pochhammer(a, n, false) == P.pochhammer_by_division(a, n, false));
                CHECK(P.pochhammer(a, n, true) == P.pochhammer_by_division(a, n, true));
                CHECK(P.pochhammer(a, n, false) * P.pochhammer(-a, -n, true) == char_eval(*F, n, F->neg(1)));
                for (int b = 0; b < N; ++b) {
                    CHECK(P.pochhammer(a, b + n, false) == P.pochhammer(a, b, false) * P.pochhammer(a + b, n, false));
                    CHECK((P.pochhammer(a, n, false) / P.pochhammer(b, n, true)).in_subfield(N));
                }
            }
        }
    }
}

TEST_CASE("duplication") {
    for (int q : {3, 5, 7, 9, 11, 13}) {
        auto F = build_field_q(q);
        const PowerGauss& P = power_gauss(F);
        const int N = q - 1, f = N / 2;
        for (int a = 0; a < N; ++a)
            for (int n = 0; n < N; ++n)
                CHECK(P.pochhammer(2 * a, 2 * n, false) ==
                      char_eval(*F, n, F->from_int(4)) * P.pochhammer(a, n, false) * P.pochhammer(a + f, n, false));
    }
}

}
