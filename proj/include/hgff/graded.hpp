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
#include <vector>

#include "hgff/characters.hpp"
#include "hgff/cyclotomic.hpp"
#include "hgff/field.hpp"

namespace hgff {

class GaussAlgebra;

// c * g(omega^r) with c in Q(zeta_{q-1}) and 0 <= r < p-1.
struct Homog {
    int r = 0;
    CycloNum c;
};

// An element of Q(zeta_{p(q-1)}) written as sum_r c_r g(omega^r), r < p-1. The
// g(omega^r) lie in distinct eigenspaces of Gal(Q(zeta_{p(q-1)})/Q(zeta_{q-1})),
// so this is a basis and the coordinates are canonical.
class Graded {
public:
    Graded() = default;
    explicit Graded(const GaussAlgebra& A);
    Graded(const GaussAlgebra& A, const Homog& h);
    Graded(const GaussAlgebra& A, const CycloNum& scalar);

    const GaussAlgebra& algebra() const { return *A_; }
    int parts() const { return int(c_.size()); }
    const CycloNum& part(int r) const { return c_[r]; }
    CycloNum& part(int r) { return c_[r]; }

    bool is_zero() const;
    // Lies in Q(zeta_{q-1}): no weight outside r = 0.
    bool psi_free() const;

    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);
    Graded& operator+=(const Homog& h);
    Graded& operator*=(const Graded& o);
    Graded& operator*=(const Homog& h);
    Graded& operator*=(const CycloNum& s);
    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(Graded a, const Graded& b) { return a *= b; }
    friend Graded operator*(Graded a, const Homog& b) { return a *= b; }
    friend Graded operator*(Graded a, const CycloNum& b) { return a *= b; }
    Graded operator-() const;
    Graded scale(const Integer& num, const Integer& den = 1) const;
    Graded mul_root(int64_t k) const;
    Graded conj() const;
    // Single-weight element: homogeneous inverse; throws otherwise.
    Graded inverse_homog() const;

    friend bool operator==(const Graded& a, const Graded& b);
    friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }

private:
    const GaussAlgebra* A_ = nullptr;
    std::vector<CycloNum> c_;
};

// Multiplication tables for the graded form of Gauss sums over one field.
// Built from two-variable Jacobi sums and Gauss sums of characters trivial on
// F_p^*, all of which lie in Q(zeta_{q-1}).
class GaussAlgebra {
public:
    explicit GaussAlgebra(FieldPtr F);

    const FieldCtx& field() const { return *F_; }
    const FieldPtr& field_ptr() const { return F_; }
    int N() const { return N_; }
    int P() const { return P_; }
    int q() const { return F_->q; }

    int wt(int s) const { return s % P_; }
    // g(omega^s) / g(omega^{s mod (p-1)})
    const CycloNum& K(int s) const { return K_[char_mod(*F_, s)]; }
    // g(omega^a) g(omega^b) / g(omega^{(a+b) mod (p-1)}), a, b < p-1
    const CycloNum& M(int a, int b) const { return M_[size_t(a) * P_ + b]; }
    const CycloNum& zeta(int64_t k) const {
        int64_t r = k % N_;
        return zeta_[r < 0 ? r + N_ : r];
    }
    int sign_exp(int j) const { return char_sign_exp(*F_, j); }

    Homog mul(const Homog& a, const Homog& b) const;
    Homog gauss(int j) const;
    Homog gauss_circle(int j) const;
    Homog inv_gauss(int j) const;
    Homog inv_gauss_circle(int j) const;
    Homog poch(int a, int n) const;
    Homog poch_circle(int a, int n) const;
    Homog inv_poch_circle(int b, int n) const;
    // (omega^a)_{omega^n} / (omega^b)°_{omega^n}, which has weight zero.
    const CycloNum& ratio(int a, int b, int n) const;
    bool has_ratio_table() const { return !ratio_.empty(); }

    Graded psi(int x) const { return psi_[F_->trace(x)]; }
    Graded one() const { return Graded(*this, CycloNum::integer(N_, 1)); }
    Graded scalar(const Integer& num, const Integer& den = 1) const {
        return Graded(*this, CycloNum::rational(N_, num, den));
    }
    Graded chi(int j, int x) const;

    // Power-basis coordinates over Q(zeta_{p(q-1)}); compressed to q-1 when possible.
    CycloNum to_power(const Graded& v) const;

private:
    FieldPtr F_;
    int N_, P_;
    std::vector<CycloNum> K_;
    std::vector<CycloNum> M_;
    std::vector<CycloNum> zeta_;
    std::vector<CycloNum> ratio_;
    std::vector<Graded> psi_;
};

// One shared algebra per field, built on first use.
const GaussAlgebra& gauss_algebra(const FieldPtr& F);

}  // namespace hgff
