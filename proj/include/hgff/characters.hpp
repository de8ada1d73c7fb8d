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

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hgff/cyclotomic.hpp"
#include "hgff/field.hpp"

namespace hgff {

// Multiplicative characters are labelled by j mod q-1: omega^j with
// omega(g) = zeta_{q-1} for the fixed generator g. chi(0) = 0 for every chi.
struct MultChar {
    int j = 0;
    friend bool operator==(MultChar a, MultChar b) { return a.j == b.j; }
};

inline int char_mod(const FieldCtx& F, int64_t j) {
    int64_t n = F.q - 1;
    int64_t r = j % n;
    return int(r < 0 ? r + n : r);
}

// Index of a character of exact order n (the one with j = (q-1)/n).
int char_of_order(const FieldCtx& F, int n);
int char_quadratic(const FieldCtx& F);
// Order of omega^j.
int char_order(const FieldCtx& F, int j);
// Exponent e with chi(x) = zeta_{q-1}^e, or -1 when x = 0.
inline int char_exp(const FieldCtx& F, int j, int x) {
    if (x == 0) return -1;
    return int((int64_t(j) * F.dlog_or_neg(x)) % (F.q - 1));
}
// Exponent of chi(-1).
int char_sign_exp(const FieldCtx& F, int j);
CycloNum char_eval(const FieldCtx& F, int j, int x);

// Names: e, phi, sigma, sigma3, rho, rho2, w^j (j may be negative).
int parse_char(const FieldCtx& F, const std::string& name);
std::string char_name(const FieldCtx& F, int j);

// Additive character psi(x) = zeta_p^{Tr x}, working conductor p(q-1).
int psi_conductor(const FieldCtx& F);
CycloNum psi_eval(const FieldCtx& F, int x);

// Gauss and Jacobi sums computed directly in the power basis of Q(zeta_{p(q-1)}).
class PowerGauss {
public:
    explicit PowerGauss(FieldPtr F);
    const FieldCtx& field() const { return *F_; }
    int conductor() const { return m_; }
    const CycloNum& gauss(int j) const { return table_[char_mod(*F_, j)]; }
    CycloNum gauss_circle(int j) const;
    // 1/g(chi) through g(chi) g°(chi^-1) = chi(-1) q.
    CycloNum inv_gauss(int j) const;
    CycloNum inv_gauss_circle(int j) const;
    CycloNum pochhammer(int a, int n, bool circle) const;
    // Same quotient through extended-gcd inversion; used as a cross-check.
    CycloNum pochhammer_by_division(int a, int n, bool circle) const;

private:
    FieldPtr F_;
    int m_;
    std::vector<CycloNum> table_;
};

CycloNum gauss_direct(const FieldCtx& F, int j);
// Shared per-field table; built on first use.
const PowerGauss& power_gauss(const FieldPtr& F);

// Jacobi sum (-1)^{n-1} sum_{x_1+..+x_n=1} prod chi_i(x_i) over Q(zeta_{q-1}).
CycloNum jacobi_brute(const FieldCtx& F, const std::vector<int>& js);
// Same value by the Gauss-quotient formula, with the all-trivial branch separate.
CycloNum jacobi(const FieldPtr& F, const std::vector<int>& js);
// Two-variable Jacobi sum as a group-ring count, cheap for large fields.
CycloNum jacobi2_brute(const FieldCtx& F, int a, int b);

}  // namespace hgff
