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

#include "hgff/varieties.hpp"

#include <map>
#include <mutex>
#include <string>

#include "hgff/characters.hpp"
#include "hgff/errors.hpp"
#include "hgff/hyper.hpp"

namespace hgff {

namespace {

int phi_of(const FieldCtx& F, int x) {
    if (x == 0) return 0;
    return F.is_square(x) ? 1 : -1;
}

void need_odd(const FieldCtx& F, const char* what) {
    if (F.p == 2) throw BadLambda(std::string(what) + " needs odd characteristic");
}

void check_lambda(const FieldCtx& F, int lambda) {
    if (lambda < 0 || lambda >= F.q) throw BadLambda("lambda code out of range");
    if (lambda == 0 || lambda == 1) throw BadLambda("lambda must not be 0 or 1");
}

int64_t as_int64(const CycloNum& v, const char* what) {
    CycloNum c = v.compress_min();
    if (!c.is_integer()) throw NonIntegerPowerSum(std::string(what) + " is not a rational integer: " + c.str());
    auto [n, d] = c.rational_value();
    if (!n.is_small()) throw BoundExceeded(std::string(what) + " exceeds 64 bits");
    return n.small();
}

int64_t ipow(int64_t b, int k) {
    int64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

// Extension fields and embeddings, shared read-only once built.
struct Ext {
    FieldPtr E;
    std::shared_ptr<FieldEmbedding> emb;
};

const Ext& extension(const FieldPtr& F, int n) {
    static std::mutex mu;
    static std::map<std::pair<const FieldCtx*, int>, Ext> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(F.get(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Ext x;
    x.E = n == 1 ? F : build_field(F->p, F->e * n);
    x.emb = std::make_shared<FieldEmbedding>(F, x.E);
    return cache.emplace(key, std::move(x)).first->second;
}

}  // namespace

int64_t elliptic_trace_sum(const FieldCtx& F, int lambda) {
    need_odd(F, "elliptic trace");
    int64_t s = 0;
    for (int x = 0; x < F.q; ++x) s += phi_of(F, F.mul(F.sub(1, x), F.sub(1, F.mul(lambda, F.mul(x, x)))));
    return -s;
}

EllipticTrace elliptic_trace(const FieldPtr& F, int lambda) {
    check_lambda(*F, lambda);
    EllipticTrace r;
    r.lambda = lambda;
    r.a = elliptic_trace_sum(*F, lambda);
    if ((F->q - 1) % 4 == 0) {
        int s = char_of_order(*F, 4);
        ParamMultiset A(F->q - 1, {s, s}), B(F->q - 1, {0, 0});
        CycloNum v = hyp_eval(F, A, B, F->sub(1, lambda)).value;
        v *= char_eval(*F, char_mod(*F, -s), F->neg(lambda));
        r.a_hyp = as_int64(v, "a(E)");
        r.agree = *r.a_hyp == r.a;
    }
    return r;
}

int64_t k3_b_naive(const FieldCtx& F, int lambda) {
    int64_t b = 0;
    for (int x = 0; x < F.q; ++x) {
        int fx = F.mul(x, F.sub(1, x));
        if (fx == 0) continue;
        int lx = F.mul(lambda, x);
        for (int y = 0; y < F.q; ++y) {
            int fy = F.mul(y, F.sub(1, y));
            if (fy == 0) continue;
            b += phi_of(F, F.mul(F.sub(1, F.mul(lx, y)), F.mul(fx, fy)));
        }
    }
    return b;
}

ZetaK3 k3_count(const FieldPtr& F, int lambda) {
    check_lambda(*F, lambda);
    need_odd(*F, "K3 count");
    const int64_t q = F->q;
    ZetaK3 z;
    z.lambda = lambda;
    z.u = phi_of(*F, F->sub(1, lambda));
    z.a = elliptic_trace_sum(*F, F->sub(1, lambda));
    z.b_naive = k3_b_naive(*F, lambda);
    int f = char_quadratic(*F);
    ParamMultiset A(F->q - 1, {f, f, f}), B(F->q - 1, {0, 0, 0});
    z.b_hyp = as_int64(hyp_eval(F, A, B, lambda).value, "b(lambda)");
    z.b_split = z.u * (z.a * z.a - q);
    z.agree = z.b_naive == z.b_hyp && z.b_naive == z.b_split;
    z.points = 1 + q * q + 19 * q + z.b_naive;
    return z;
}

ZetaK3 zeta_k3(const FieldPtr& F, int lambda) {
    ZetaK3 z = k3_count(F, lambda);
    const int64_t q = F->q;
    z.trivial_roots = {1, q * q};
    z.trivial_roots.insert(z.trivial_roots.end(), 19, q);
    z.trivial_roots.push_back(z.u * q);
    z.pair_sum = z.u * (z.a * z.a - 2 * q);
    z.pair_prod = q * q;
    return z;
}

int64_t k3_pair_power_sum(int64_t a, int64_t q, int n) {
    int64_t s0 = 2, s1 = a * a - 2 * q;
    if (n == 0) return s0;
    for (int i = 1; i < n; ++i) {
        int64_t s2 = (a * a - 2 * q) * s1 - q * q * s0;
        s0 = s1;
        s1 = s2;
    }
    return s1;
}

K3Extension k3_extension_check(const FieldPtr& F, int lambda, int n) {
    check_lambda(*F, lambda);
    need_odd(*F, "K3 count");
    const Ext& x = extension(F, n);
    K3Extension r;
    r.n = n;
    r.b_naive = k3_b_naive(*x.E, x.emb->embed(lambda));
    int u = phi_of(*F, F->sub(1, lambda));
    int64_t a = elliptic_trace_sum(*F, F->sub(1, lambda));
    int64_t un = n % 2 ? u : 1;
    r.b_predicted = un * (k3_pair_power_sum(a, F->q, n) + ipow(F->q, n));
    r.agree = r.b_naive == r.b_predicted;
    return r;
}

DworkReport dwork_P(const FieldPtr& F, int lambda) {
    const FieldCtx& k = *F;
    if ((k.q - 1) % 4 != 0) throw BadLambda("Dwork family needs 4 | q-1");
    if (lambda <= 0 || lambda >= k.q) throw BadLambda("lambda must be a nonzero element code");
    int l2 = k.mul(lambda, lambda), l4 = k.mul(l2, l2);
    if (l4 == 1) throw BadLambda("lambda^4 = 1");
    const int64_t q = k.q;

    DworkReport r;
    r.lambda = lambda;
    r.u = phi_of(k, k.sub(1, l2));
    r.v = phi_of(k, k.add(1, l2));
    int s = char_of_order(k, 4);
    r.w = r.u * r.v * (char_exp(k, s, k.neg(1)) == 0 ? 1 : -1);

    for (int n = 1; n <= 3; ++n) {
        const Ext& x = extension(F, n);
        const FieldCtx& E = *x.E;
        int sn = char_of_order(E, 4);
        ParamMultiset A(E.q - 1, {sn, 2 * sn, 3 * sn}), B(E.q - 1, {0, 0, 0});
        int li = E.inv(E.pow(x.emb->embed(lambda), 4));
        r.F[n - 1] = as_int64(hyp_eval(x.E, A, B, li).value, "F_n");
    }
    // Newton: e1 = F1, 2 e2 = e1 F1 - F2, 3 e3 = e2 F1 - e1 F2 + F3.
    r.e1 = r.F[0];
    int64_t t2 = r.e1 * r.F[0] - r.F[1];
    if (t2 % 2) throw NonIntegerPowerSum("Newton division by 2 failed");
    r.e2 = t2 / 2;
    int64_t t3 = r.e2 * r.F[0] - r.e1 * r.F[1] + r.F[2];
    if (t3 % 3) throw NonIntegerPowerSum("Newton division by 3 failed");
    r.e3 = t3 / 3;
    r.e3_ok = r.e3 == q * q * q;

    int t = k.sub(1, k.inv(l4));
    r.square = k.is_square(t);
    r.matched = true;
    if (r.square) {
        int d = k.dlog(t);
        for (int64_t h : {int64_t(d / 2), int64_t(d / 2 + (k.q - 1) / 2)}) {
            DworkRoot dr;
            dr.r = k.gpow(h);
            dr.lambda_prime = k.div(k.sub(dr.r, 1), k.add(dr.r, 1));
            dr.a = elliptic_trace_sum(k, k.sub(1, dr.lambda_prime));
            dr.matched = r.e1 == dr.a * dr.a - q && r.e2 == q * dr.a * dr.a - q * q && r.e3 == q * q * q;
            r.matched = r.matched && dr.matched;
            r.roots.push_back(dr);
        }
    }
    return r;
}

}  // namespace hgff
