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

#include "hgff/field.hpp"

#include <cstdlib>
#include <stdexcept>

#include "hgff/errors.hpp"

namespace hgff {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
    trim(a);
    const int df = int(f.size()) - 1;
    // f is monic
    for (int i = int(a.size()) - 1; i >= df; --i) {
        int c = a[i];
        if (!c) continue;
        for (int j = 0; j <= df; ++j) a[i - df + j] = int((a[i - df + j] - int64_t(c) * f[j] % p + p) % p);
    }
    if (int(a.size()) > df) a.resize(df);
    trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
    if (a.empty() || b.empty()) return {};
    Poly t(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) t[i + j] = int((t[i + j] + int64_t(a[i]) * b[j]) % p);
    return poly_mod(std::move(t), f, p);
}

Poly poly_powmod(Poly base, int64_t k, const Poly& f, int p) {
    Poly r = {1};
    base = poly_mod(std::move(base), f, p);
    while (k > 0) {
        if (k & 1) r = poly_mulmod(r, base, f, p);
        k >>= 1;
        if (k) base = poly_mulmod(base, base, f, p);
    }
    return r;
}

int inv_mod(int a, int p) {
    int64_t r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return int(r);
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic then reduce a mod b
        int iv = inv_mod(b.back(), p);
        for (auto& c : b) c = int(int64_t(c) * iv % p);
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^(p^k) mod f by repeated p-th powering.
Poly frob_x(int k, const Poly& f, int p) {
    Poly r = {0, 1};
    for (int i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
}

bool irreducible(const Poly& f, int p) {
    const int e = int(f.size()) - 1;
    if (e == 1) return true;
    Poly xe = frob_x(e, f, p);
    Poly diff = xe;
    diff.resize(std::max<size_t>(diff.size(), 2));
    diff[1] = (diff[1] - 1 + p) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (int64_t r : prime_factors(e)) {
        Poly xr = frob_x(int(e / r), f, p);
        xr.resize(std::max<size_t>(xr.size(), 2));
        xr[1] = (xr[1] - 1 + p) % p;
        trim(xr);
        Poly g = poly_gcd(f, xr, p);
        if (g.size() > 1) return false;
    }
    return true;
}

Poly code_to_poly(int code, int p, int e) {
    Poly a(e);
    for (int i = 0; i < e; ++i) {
        a[i] = code % p;
        code /= p;
    }
    trim(a);
    return a;
}

int poly_to_code(const Poly& a, int p) {
    int code = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) code = code * p + a[i];
    return code;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t field_bound() {
    if (const char* s = std::getenv("HGFF_FIELD_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 1) return v;
    }
    return int64_t(1) << 20;
}

int FieldCtx::add(int a, int b) const {
    if (e == 1) {
        int s = a + b;
        return s >= p ? s - p : s;
    }
    int r = 0;
    for (int i = 0; i < e; ++i) {
        int da = a % p, db = b % p;
        a /= p;
        b /= p;
        int s = da + db;
        if (s >= p) s -= p;
        r += s * pw_[i];
    }
    return r;
}

int FieldCtx::sub(int a, int b) const {
    if (e == 1) {
        int s = a - b;
        return s < 0 ? s + p : s;
    }
    int r = 0;
    for (int i = 0; i < e; ++i) {
        int da = a % p, db = b % p;
        a /= p;
        b /= p;
        int s = da - db;
        if (s < 0) s += p;
        r += s * pw_[i];
    }
    return r;
}

int FieldCtx::inv(int a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    return exp_[(q - 1 - dlog_[a]) % (q - 1)];
}

int FieldCtx::pow(int a, int64_t k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw DivisionByZero("negative power of zero");
        return 0;
    }
    return gpow(int64_t(dlog_[a]) * (k % (q - 1)));
}

int FieldCtx::dlog(int x) const {
    if (x <= 0 || x >= q) throw ZeroHasNoDlog("zero has no discrete logarithm");
    return dlog_[x];
}

std::string FieldCtx::modulus_str() const {
    std::string s;
    for (size_t i = 0; i < modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus[i]);
    }
    return s;
}

FieldPtr build_field(int p, int e) {
    if (!is_prime(p)) throw NonPrimeP("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("extension degree must be positive");
    int64_t q64 = 1;
    for (int i = 0; i < e; ++i) {
        q64 *= p;
        if (q64 > field_bound()) throw BoundExceeded("field size exceeds configured bound");
    }
    auto F = std::make_shared<FieldCtx>();
    F->p = p;
    F->e = e;
    F->q = int(q64);
    const int q = F->q;
    F->pw_.resize(e + 1);
    F->pw_[0] = 1;
    for (int i = 1; i <= e; ++i) F->pw_[i] = F->pw_[i - 1] * p;

    // Smallest monic irreducible: lower coefficients enumerated by code order.
    Poly f;
    bool found = false;
    for (int code = 0; code < q && !found; ++code) {
        Poly cand(e + 1);
        int c = code;
        for (int i = 0; i < e; ++i) {
            cand[i] = c % p;
            c /= p;
        }
        cand[e] = 1;
        if (e > 1 && cand[0] == 0) continue;
        if (irreducible(cand, p)) {
            f = cand;
            found = true;
        }
    }
    if (!found) {
        std::fprintf(stderr, "no irreducible polynomial of degree %d over F_%d\n", e, p);
        std::abort();
    }
    F->modulus = f;

    auto prime_div = prime_factors(q - 1);
    auto mulc = [&](int a, int b) {
        return poly_to_code(poly_mulmod(code_to_poly(a, p, e), code_to_poly(b, p, e), f, p), p);
    };
    int gen = -1;
    for (int c = 1; c < q && gen < 0; ++c) {
        bool ok = true;
        for (int64_t r : prime_div) {
            Poly t = poly_powmod(code_to_poly(c, p, e), (q - 1) / r, f, p);
            if (t.size() == 1 && t[0] == 1) {
                ok = false;
                break;
            }
        }
        if (q == 2) ok = (c == 1);
        if (ok) gen = c;
    }
    if (gen < 0) {
        std::fprintf(stderr, "no multiplicative generator found for q=%d\n", q);
        std::abort();
    }
    F->generator = gen;
    F->exp_.resize(q - 1);
    F->dlog_.assign(q, -1);
    int cur = 1;
    for (int i = 0; i < q - 1; ++i) {
        F->exp_[i] = cur;
        if (F->dlog_[cur] != -1) {
            std::fprintf(stderr, "generator order check failed\n");
            std::abort();
        }
        F->dlog_[cur] = i;
        cur = e == 1 ? int(int64_t(cur) * gen % p) : mulc(cur, gen);
    }
    F->trace_.assign(q, 0);
    for (int x = 1; x < q; ++x) {
        int s = 0;
        int64_t d = F->dlog_[x];
        for (int i = 0; i < e; ++i) {
            s = F->add(s, F->gpow(d));
            d = d * p % (q - 1);
        }
        if (s >= p) {
            std::fprintf(stderr, "trace left the prime field\n");
            std::abort();
        }
        F->trace_[x] = s;
    }
    return F;
}

FieldPtr build_field_q(int64_t q) {
    if (q < 2) throw NonPrimeP("q must be a prime power");
    int64_t p = 0;
    for (int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;
    int e = 0;
    int64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw NonPrimeP(std::to_string(q) + " is not a prime power");
    return build_field(int(p), e);
}

FieldEmbedding::FieldEmbedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    const FieldCtx& B = *base_;
    const FieldCtx& E = *ext_;
    if (B.p != E.p || E.e % B.e != 0) throw std::invalid_argument("not a field extension");
    l_ = E.e / B.e;
    const int64_t step = (int64_t(E.q) - 1) / (B.q - 1);
    norm_exp_ = step;
    // Root of the base modulus inside the subfield of size q.
    auto eval_mod = [&](int theta) {
        int acc = 0;
        for (int i = B.e; i >= 0; --i) acc = E.add(E.mul(acc, theta), B.modulus[i]);
        return acc;
    };
    int theta = -1;
    if (B.e == 1) {
        theta = 0;  // unused: prime field embeds digit-wise
    } else {
        for (int x = 1; x < E.q && theta < 0; ++x) {
            if (E.dlog(x) % step != 0) continue;
            if (eval_mod(x) == 0) theta = x;
        }
        if (theta < 0) throw std::logic_error("base modulus has no root in extension");
    }
    embed_.resize(B.q);
    restrict_.assign(E.q, -1);
    for (int c = 0; c < B.q; ++c) {
        int img;
        if (B.e == 1) {
            img = c;
        } else {
            img = 0;
            int t = c;
            int pw = 1;
            for (int i = 0; i < B.e; ++i) {
                int d = t % B.p;
                t /= B.p;
                img = E.add(img, E.mul(d, pw));
                pw = E.mul(pw, theta);
            }
        }
        embed_[c] = img;
        restrict_[img] = c;
    }
}

int FieldEmbedding::norm(int x) const {
    if (x == 0) return 0;
    int y = ext_->pow(x, norm_exp_);
    int b = restrict_[y];
    if (b < 0) throw std::logic_error("norm left the base field");
    return b;
}

}  // namespace hgff
