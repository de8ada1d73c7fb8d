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

#include <cstdint>
#include <optional>
#include <vector>

#include "hgff/field.hpp"

namespace hgff {

// a(E) for y^2 = (1-x)(1-lambda x^2), by the affine character sum and, when
// 4 | q-1, by sigma-bar(-lambda) F(sigma+sigma, e+e; 1-lambda).
struct EllipticTrace {
    int lambda = 0;
    int64_t a = 0;
    std::optional<int64_t> a_hyp;
    bool agree = true;
};

// -sum_x phi((1-x)(1-lambda x^2)); odd q, lambda not 0 or 1.
int64_t elliptic_trace_sum(const FieldCtx& F, int lambda);
EllipticTrace elliptic_trace(const FieldPtr& F, int lambda);

// X_lambda: z^2 = (1 - lambda x y) x (1-x) y (1-y).
struct ZetaK3 {
    int lambda = 0;
    int u = 1;           // phi(1 - lambda)
    int64_t a = 0;       // a(E_{1-lambda})
    int64_t b_naive = 0;
    int64_t b_hyp = 0;   // F(phi+phi+phi, e+e+e; lambda)
    int64_t b_split = 0; // u (a^2 - q)
    bool agree = false;
    int64_t points = 0;  // 1 + q^2 + 19 q + b

    // Reciprocal roots of the denominator besides the pair: 1, q^2, q (x19), u q.
    std::vector<int64_t> trivial_roots;
    int64_t pair_sum = 0;   // u (a^2 - 2q)
    int64_t pair_prod = 0;  // q^2
};

int64_t k3_b_naive(const FieldCtx& F, int lambda);
ZetaK3 k3_count(const FieldPtr& F, int lambda);
ZetaK3 zeta_k3(const FieldPtr& F, int lambda);

// alpha^{2n} + alpha-bar^{2n} from s_1 = a^2 - 2q.
int64_t k3_pair_power_sum(int64_t a, int64_t q, int n);

struct K3Extension {
    int n = 1;
    int64_t b_naive = 0;      // recount over k_n
    int64_t b_predicted = 0;  // u^n (s_n + q^n)
    bool agree = false;
};
K3Extension k3_extension_check(const FieldPtr& F, int lambda, int n);

struct DworkRoot {
    int r = 0;             // square root of 1 - lambda^-4
    int lambda_prime = 0;  // (1 + l') / (1 - l') = r
    int64_t a = 0;         // a(E_{1 - l'})
    bool matched = false;
};

// D_lambda: x1^4 + x2^4 + x3^4 + x4^4 = 4 lambda x1 x2 x3 x4.
struct DworkReport {
    int lambda = 0;
    int64_t F[3] = {0, 0, 0};
    // P(t) = exp(-sum F_n t^n / n) = 1 - e1 t + e2 t^2 - e3 t^3
    int64_t e1 = 0, e2 = 0, e3 = 0;
    int u = 1, v = 1, w = 1;
    bool square = false;  // 1 - lambda^-4 is a nonzero square
    std::vector<DworkRoot> roots;
    bool matched = false;  // every root matched (vacuous when !square)
    bool e3_ok = false;
};

DworkReport dwork_P(const FieldPtr& F, int lambda);

}  // namespace hgff
