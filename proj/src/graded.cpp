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

#include "hgff/graded.hpp"

#include "hgff/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hgff {

Graded::Graded(const GaussAlgebra& A) : A_(&A), c_(A.P(), CycloNum(A.N())) {}

Graded::Graded(const GaussAlgebra& A, const Homog& h) : Graded(A) { c_[h.r] = h.c; }

Graded::Graded(const GaussAlgebra& A, const CycloNum& scalar) : Graded(A) { c_[0] = scalar; }

bool Graded::is_zero() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Graded::psi_free() const {
    for (size_t r = 1; r < c_.size(); ++r)
        if (!c_[r].is_zero()) return false;
    return true;
}

Graded& Graded::operator+=(const Graded& o) {
    if (!A_) return *this = o;
    if (!o.A_) return *this;
    for (size_t r = 0; r < c_.size(); ++r)
        if (!o.c_[r].is_zero()) c_[r] += o.c_[r];
    return *this;
}

Graded& Graded::operator-=(const Graded& o) {
    if (!o.A_) return *this;
    if (!A_) return *this = -o;
    for (size_t r = 0; r < c_.size(); ++r)
        if (!o.c_[r].is_zero()) c_[r] -= o.c_[r];
    return *this;
}

Graded& Graded::operator+=(const Homog& h) {
    c_[h.r] += h.c;
    return *this;
}

Graded& Graded::operator*=(const Graded& o) {
    const int P = A_->P();
    if (P == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<CycloNum> out(P, CycloNum(A_->N()));
    for (int a = 0; a < P; ++a) {
        if (c_[a].is_zero()) continue;
        for (int b = 0; b < P; ++b) {
            if (o.c_[b].is_zero()) continue;
            CycloNum t = c_[a] * o.c_[b];
            if (a && b) t *= A_->M(a, b);
            out[(a + b) % P] += t;
        }
    }
    c_ = std::move(out);
    return *this;
}

Graded& Graded::operator*=(const Homog& h) {
    const int P = A_->P();
    std::vector<CycloNum> out(P, CycloNum(A_->N()));
    for (int a = 0; a < P; ++a) {
        if (c_[a].is_zero()) continue;
        CycloNum t = c_[a] * h.c;
        if (a && h.r) t *= A_->M(a, h.r);
        out[(a + h.r) % P] = std::move(t);
    }
    c_ = std::move(out);
    return *this;
}

Graded& Graded::operator*=(const CycloNum& s) {
    for (auto& c : c_)
        if (!c.is_zero()) c *= s;
    return *this;
}

Graded Graded::operator-() const {
    Graded r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Graded Graded::scale(const Integer& num, const Integer& den) const {
    Graded r(*this);
    for (auto& c : r.c_) c = c.scale(num, den);
    return r;
}

Graded Graded::mul_root(int64_t k) const {
    Graded r(*this);
    for (auto& c : r.c_)
        if (!c.is_zero()) c = c.mul_root(k);
    return r;
}

Graded Graded::conj() const {
    const int P = A_->P(), N = A_->N();
    Graded out(*A_);
    for (int r = 0; r < P; ++r) {
        if (c_[r].is_zero()) continue;
        // conj(g(omega^r)) = omega^r(-1) g(omega^-r)
        int nr = (N - r) % N;
        CycloNum t = c_[r].conj().mul_root(A_->sign_exp(r)) * A_->K(nr);
        out.c_[A_->wt(nr)] += t;
    }
    return out;
}

Graded Graded::inverse_homog() const {
    int w = -1;
    for (int r = 0; r < parts(); ++r) {
        if (c_[r].is_zero()) continue;
        if (w >= 0) throw std::logic_error("inverse of a mixed-weight element");
        w = r;
    }
    if (w < 0) throw DivisionByZero("inverse of zero");
    Homog h = A_->inv_gauss(w);
    h.c *= c_[w].inverse();
    return Graded(*A_, h);
}

bool operator==(const Graded& a, const Graded& b) {
    if (!a.A_ || !b.A_) return (!a.A_ || a.is_zero()) && (!b.A_ || b.is_zero());
    for (size_t r = 0; r < a.c_.size(); ++r)
        if (a.c_[r] != b.c_[r]) return false;
    return true;
}

GaussAlgebra::GaussAlgebra(FieldPtr F) : F_(std::move(F)), N_(F_->q - 1), P_(F_->p - 1) {
    const FieldCtx& k = *F_;
    const int q = k.q;
    zeta_.reserve(N_);
    for (int i = 0; i < N_; ++i) zeta_.push_back(CycloNum::root(N_, i));

    // Gauss sums of characters trivial on F_p^*: g = -(S_0 - S_1), S_t = sum over Tr x = t.
    auto gauss_flat = [&](int u) {
        std::vector<Integer> c(N_);
        std::vector<int64_t> cnt(N_, 0);
        for (int x = 1; x < q; ++x) {
            int t = k.trace(x);
            if (t > 1) continue;
            int ex = int((int64_t(u) * k.dlog_or_neg(x)) % N_);
            cnt[ex] += (t == 0) ? -1 : 1;
        }
        for (int i = 0; i < N_; ++i) c[i] = cnt[i];
        return CycloNum::from_group_ring(N_, std::move(c));
    };

    K_.assign(N_, CycloNum::integer(N_, 1));
    for (int s = P_; s < N_; ++s) {
        int r = s % P_;
        int u = s - r;
        CycloNum gu = gauss_flat(u);
        if (r == 0) {
            K_[s] = gu;
        } else {
            // g(r) g(u) = j(r,u) g(s) and |j(r,u)|^2 = q
            CycloNum j = jacobi2_brute(k, r, u);
            K_[s] = (gu * j.conj()).scale(1, q);
        }
    }
    M_.assign(size_t(P_) * P_, CycloNum::integer(N_, 1));
    for (int a = 1; a < P_; ++a) {
        for (int b = 1; b < P_; ++b) {
            int s = (a + b) % N_;
            CycloNum j = jacobi2_brute(k, a, b);
            if (s == 0) j = j.scale(q);
            M_[size_t(a) * P_ + b] = j * K_[s];
        }
    }

    if (N_ <= 30) {
        ratio_.reserve(size_t(N_) * N_ * N_);
        for (int a = 0; a < N_; ++a)
            for (int b = 0; b < N_; ++b)
                for (int n = 0; n < N_; ++n) {
                    Homog h = mul(poch(a, n), inv_poch_circle(b, n));
                    if (h.r != 0) throw std::logic_error("Pochhammer ratio has nonzero weight");
                    ratio_.push_back(std::move(h.c));
                }
    }

    psi_.reserve(k.p);
    psi_.push_back(one());
    for (int t = 1; t < k.p; ++t) {
        int x = -1;
        for (int y = 1; y < q && x < 0; ++y)
            if (k.trace(y) == t) x = y;
        // psi(x) = -(1/(q-1)) sum_nu g(nu^-1) nu(x)
        Graded acc(*this);
        const int dx = k.dlog_or_neg(x);
        for (int n = 0; n < N_; ++n) {
            Homog h = gauss(-n);
            h.c = h.c.mul_root(int64_t(n) * dx);
            acc += h;
        }
        psi_.push_back(acc.scale(-1, N_));
    }
}

Homog GaussAlgebra::mul(const Homog& a, const Homog& b) const {
    Homog out{(a.r + b.r) % P_, a.c * b.c};
    if (a.r && b.r) out.c *= M(a.r, b.r);
    return out;
}

Homog GaussAlgebra::gauss(int j) const {
    j = char_mod(*F_, j);
    return {wt(j), K_[j]};
}

Homog GaussAlgebra::gauss_circle(int j) const {
    j = char_mod(*F_, j);
    if (j == 0) return {0, CycloNum::integer(N_, F_->q)};
    return gauss(j);
}

Homog GaussAlgebra::inv_gauss(int j) const {
    j = char_mod(*F_, j);
    int nj = char_mod(*F_, -j);
    // 1/g(chi) = chi(-1) g°(chi^-1) / q
    CycloNum c = K_[nj].mul_root(sign_exp(j));
    if (j != 0) c = c.scale(1, F_->q);
    return {wt(nj), std::move(c)};
}

Homog GaussAlgebra::inv_gauss_circle(int j) const {
    j = char_mod(*F_, j);
    Homog h = inv_gauss(j);
    if (j == 0) h.c = h.c.scale(1, F_->q);
    return h;
}

Homog GaussAlgebra::poch(int a, int n) const { return mul(gauss(a + n), inv_gauss(a)); }

Homog GaussAlgebra::poch_circle(int a, int n) const { return mul(gauss_circle(a + n), inv_gauss_circle(a)); }

Homog GaussAlgebra::inv_poch_circle(int b, int n) const { return mul(gauss_circle(b), inv_gauss_circle(b + n)); }

const CycloNum& GaussAlgebra::ratio(int a, int b, int n) const {
    a = char_mod(*F_, a);
    b = char_mod(*F_, b);
    n = char_mod(*F_, n);
    return ratio_[(size_t(a) * N_ + b) * N_ + n];
}

Graded GaussAlgebra::chi(int j, int x) const {
    int e = char_exp(*F_, char_mod(*F_, j), x);
    if (e < 0) return Graded(*this);
    return Graded(*this, zeta_[e]);
}

CycloNum GaussAlgebra::to_power(const Graded& v) const {
    if (v.psi_free()) return v.part(0);
    const int m = F_->p * N_;
    CycloNum acc(m);
    for (int r = 0; r < P_; ++r) {
        if (v.part(r).is_zero()) continue;
        acc += v.part(r).lift(m) * gauss_direct(*F_, r);
    }
    return acc;
}

const GaussAlgebra& gauss_algebra(const FieldPtr& F) {
    static std::mutex mu;
    static std::map<const FieldCtx*, std::pair<FieldPtr, std::unique_ptr<GaussAlgebra>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(F.get());
    if (it == cache.end())
        it = cache.emplace(F.get(), std::make_pair(F, std::make_unique<GaussAlgebra>(F))).first;
    return *it->second.second;
}

}  // namespace hgff
