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

#include "hgff/hyper.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <unordered_map>

#include <omp.h>

#include "hgff/errors.hpp"

namespace hgff {

ParamMultiset::ParamMultiset(int n, std::initializer_list<int> js) : ParamMultiset(n, std::vector<int>(js)) {}

ParamMultiset::ParamMultiset(int n, const std::vector<int>& js) : n_(n), v_(js) {
    for (int& j : v_) {
        j %= n_;
        if (j < 0) j += n_;
    }
    std::sort(v_.begin(), v_.end());
}

int ParamMultiset::count(int j) const {
    j %= n_;
    if (j < 0) j += n_;
    auto r = std::equal_range(v_.begin(), v_.end(), j);
    return int(r.second - r.first);
}

ParamMultiset ParamMultiset::shift(int chi) const {
    std::vector<int> w(v_);
    for (int& j : w) j += chi;
    return ParamMultiset(n_, w);
}

ParamMultiset ParamMultiset::conj() const {
    std::vector<int> w(v_);
    for (int& j : w) j = -j;
    return ParamMultiset(n_, w);
}

ParamMultiset ParamMultiset::operator+(const ParamMultiset& o) const {
    std::vector<int> w(v_);
    w.insert(w.end(), o.v_.begin(), o.v_.end());
    return ParamMultiset(std::max(n_, o.n_), w);
}

bool ParamMultiset::contains(const ParamMultiset& o) const {
    return std::includes(v_.begin(), v_.end(), o.v_.begin(), o.v_.end());
}

ParamMultiset ParamMultiset::operator-(const ParamMultiset& o) const {
    if (!contains(o)) throw std::invalid_argument("multiset difference is not in the monoid");
    std::vector<int> w;
    std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(w));
    return ParamMultiset(n_, w);
}

std::string ParamMultiset::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << ']';
    return os.str();
}

int pairing(const ParamMultiset& a, const ParamMultiset& b) {
    int s = 0;
    for (size_t i = 0; i < a.idx().size();) {
        int j = a[int(i)], m = 0;
        while (i < a.idx().size() && a[int(i)] == j) ++i, ++m;
        s += m * b.count(j);
    }
    return s;
}

int pairing(const ParamMultiset& a, int chi) { return a.count(chi); }

Reduction reduce_params(const ParamMultiset& a, const ParamMultiset& b) {
    std::vector<int> g;
    std::set_intersection(a.idx().begin(), a.idx().end(), b.idx().begin(), b.idx().end(), std::back_inserter(g));
    ParamMultiset gamma(std::max(a.modulus(), b.modulus()), g);
    return {a - gamma, b - gamma, gamma};
}

ParamMultiset parse_params(const FieldCtx& F, const std::string& csv) {
    std::vector<int> js;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        js.push_back(parse_char(F, tok));
    }
    return ParamMultiset(F.q - 1, js);
}

namespace {

Homog one_homog(const GaussAlgebra& G) { return {0, CycloNum::integer(G.N(), 1)}; }

Homog generic_term(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int nu) {
    Homog h = one_homog(G);
    for (int x : a.idx()) h = G.mul(h, G.poch(x, nu));
    for (int x : b.idx()) h = G.mul(h, G.inv_poch_circle(x, nu));
    return h;
}

std::atomic<uint64_t> g_psi_checked{0}, g_psi_bad{0};

void audit(const ParamMultiset& a, const ParamMultiset& b, const Graded& v) {
    if (a.deg() != b.deg()) return;
    g_psi_checked.fetch_add(1, std::memory_order_relaxed);
    if (!v.psi_free()) g_psi_bad.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

HypTerms::HypTerms(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b) : G_(&G) {
    const int N = G.N();
    terms_.reserve(N);
    const bool table = a.deg() == b.deg() && G.has_ratio_table();
    for (int nu = 0; nu < N; ++nu) {
        if (table) {
            CycloNum c = CycloNum::integer(N, 1);
            for (int i = 0; i < a.deg(); ++i) c *= G.ratio(a[i], b[i], nu);
            terms_.push_back({0, std::move(c)});
        } else {
            terms_.push_back(generic_term(G, a, b, nu));
        }
    }
    for (auto& t : terms_) {
        if (t.c.is_zero()) continue;
        Integer g = Integer::gcd(den_, t.c.den());
        den_ = Integer::divexact(den_, g) * t.c.den();
    }
    num_.resize(N);
    for (int nu = 0; nu < N; ++nu) {
        const CycloNum& c = terms_[nu].c;
        if (c.is_zero()) continue;
        Integer f = Integer::divexact(den_, c.den());
        auto& v = num_[nu];
        v.resize(c.dim());
        for (int i = 0; i < c.dim(); ++i) v[i] = c.num(i) * f;
    }
}

Graded HypTerms::eval(int lambda) const {
    const GaussAlgebra& G = *G_;
    Graded out(G);
    if (lambda == 0) return out;
    const int N = G.N(), P = G.P();
    const int64_t d = G.field().dlog(lambda);
    std::vector<std::vector<Integer>> acc(P);
    for (int nu = 0; nu < N; ++nu) {
        const auto& v = num_[nu];
        if (v.empty()) continue;
        auto& a = acc[terms_[nu].r];
        if (a.empty()) a.resize(N);
        const int sh = int((nu * d) % N);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            int k = int(i) + sh;
            if (k >= N) k -= N;
            a[k] += v[i];
        }
    }
    const Integer den = den_ * Integer(1 - G.q());
    for (int r = 0; r < P; ++r)
        if (!acc[r].empty()) out.part(r) = CycloNum::from_group_ring(N, std::move(acc[r]), den);
    return out;
}

namespace {

struct TermKey {
    const GaussAlgebra* g;
    std::vector<int> a, b;
    bool operator==(const TermKey& o) const { return g == o.g && a == o.a && b == o.b; }
};

struct TermKeyHash {
    size_t operator()(const TermKey& k) const {
        size_t h = std::hash<const void*>()(k.g);
        for (int x : k.a) h = h * 1000003u + size_t(x) + 1;
        h = h * 7919u + 0x9e37;
        for (int x : k.b) h = h * 1000003u + size_t(x) + 1;
        return h;
    }
};

constexpr size_t kTermCacheCap = 4096;

}  // namespace

std::shared_ptr<const HypTerms> hyp_terms(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b) {
    thread_local std::unordered_map<TermKey, std::shared_ptr<const HypTerms>, TermKeyHash> cache;
    TermKey key{&G, a.idx(), b.idx()};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (cache.size() >= kTermCacheCap) cache.clear();
    auto t = std::make_shared<const HypTerms>(G, a, b);
    cache.emplace(std::move(key), t);
    return t;
}

Graded hyp_graded(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int lambda) {
    Graded v = hyp_terms(G, a, b)->eval(lambda);
    audit(a, b, v);
    return v;
}

std::vector<Graded> hyp_table(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int jobs) {
    auto t = hyp_terms(G, a, b);
    const int q = G.q();
    std::vector<Graded> out(q);
    int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
    for (int l = 0; l < q; ++l) {
        out[l] = t->eval(l);
        audit(a, b, out[l]);
    }
    return out;
}

std::vector<Graded> hyp_table_serial(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b) {
    std::vector<Graded> out;
    for (int l = 0; l < G.q(); ++l) out.push_back(hyp_graded_reference(G, a, b, l));
    return out;
}

Graded hyp_graded_reference(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int lambda) {
    Graded acc(G);
    if (lambda == 0) return acc;
    const int64_t d = G.field().dlog(lambda);
    for (int nu = 0; nu < G.N(); ++nu) {
        Homog h = generic_term(G, a, b, nu);
        h.c = h.c.mul_root(nu * d);
        acc += h;
    }
    return acc.scale(1, 1 - G.q());
}

Graded hyp_reduced(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int lambda) {
    Reduction r = reduce_params(a, b);
    return hyp_graded(G, r.a, r.b, lambda);
}

HypValue hyp_eval(const FieldPtr& F, const ParamMultiset& a, const ParamMultiset& b, int lambda) {
    const GaussAlgebra& G = gauss_algebra(F);
    Graded v = hyp_graded(G, a, b, lambda);
    HypValue out;
    out.value = G.to_power(v);
    out.conductor = out.value.m();
    out.psi_independent = out.value.m() == G.N() || out.value.in_subfield(G.N());
    return out;
}

PsiAudit psi_audit() { return {g_psi_checked.load(), g_psi_bad.load()}; }

void psi_audit_reset() {
    g_psi_checked = 0;
    g_psi_bad = 0;
}

CycloNum hyp_eval_oracle(const FieldPtr& Fp, const ParamMultiset& a, const ParamMultiset& b, int lambda) {
    const FieldCtx& F = *Fp;
    const int N = F.q - 1;
    const int d = a.deg();
    if (b.deg() != d) throw ArityMismatch("oracle needs deg(A) = deg(B)");
    std::vector<int> bb = b.idx();
    bool ok = false;
    do {
        ok = true;
        for (int i = 0; i < d; ++i)
            if (a[i] == bb[i]) ok = false;
    } while (!ok && std::next_permutation(bb.begin(), bb.end()));
    if (!ok) throw PairingViolation("no ordering pairs alpha_i != beta_i");
    if (lambda == 0) return CycloNum(N);
    std::vector<int64_t> cnt(N, 0);
    std::vector<int> t(std::max(d - 1, 0), 1);
    const int il = F.inv(lambda);
    for (;;) {
        int prod = il;
        bool skip = false;
        int64_t ex = 0;
        for (int i = 0; i + 1 < d; ++i) {
            if (t[i] == 1) skip = true;
            prod = F.div(prod, t[i]);
            ex += int64_t(a[i]) * F.dlog(t[i]) + int64_t(bb[i] - a[i] + N) * F.dlog_or_neg(F.one_minus(t[i]));
        }
        if (d == 0) {
            if (prod != 1) skip = true;
        } else {
            if (prod == 1) skip = true;
            else ex += int64_t(a[d - 1]) * F.dlog(prod) + int64_t(bb[d - 1] - a[d - 1] + N) * F.dlog(F.one_minus(prod));
        }
        if (!skip) cnt[((ex % N) + N) % N] -= 1;
        int i = 0;
        while (i < d - 1) {
            if (++t[i] < F.q) break;
            t[i] = 1;
            ++i;
        }
        if (i >= d - 1) break;
    }
    std::vector<Integer> c(N);
    for (int i = 0; i < N; ++i) c[i] = cnt[i];
    CycloNum s = CycloNum::from_group_ring(N, std::move(c));
    CycloNum den = CycloNum::integer(N, 1);
    for (int i = 0; i < d; ++i) den *= -jacobi2_brute(F, a[i], bb[i] - a[i]);
    return s / den;
}

LauricellaKind parse_lauricella_kind(const std::string& s) {
    if (s == "A") return LauricellaKind::A;
    if (s == "B") return LauricellaKind::B;
    if (s == "C") return LauricellaKind::C;
    if (s == "D") return LauricellaKind::D;
    throw UsageError("Lauricella kind must be A, B, C or D");
}

Graded lauricella_graded(const GaussAlgebra& G, LauricellaKind kind, const std::vector<int>& p,
                         const std::vector<int>& lambdas) {
    const int n = int(lambdas.size());
    if (n < 1 || n > 3) throw ArityMismatch("Lauricella functions are evaluated for 1 <= n <= 3");
    size_t want = 0;
    switch (kind) {
        case LauricellaKind::A: want = 1 + 2 * n; break;
        case LauricellaKind::B: want = 2 * n + 1; break;
        case LauricellaKind::C: want = 2 + n; break;
        case LauricellaKind::D: want = n + 2; break;
    }
    if (p.size() != want)
        throw ArityMismatch("expected " + std::to_string(want) + " parameters, got " + std::to_string(p.size()));
    const FieldCtx& F = G.field();
    const int N = G.N();
    Graded acc(G);
    for (int l : lambdas)
        if (l == 0) return acc;
    std::vector<int64_t> dl(n);
    for (int i = 0; i < n; ++i) dl[i] = F.dlog(lambdas[i]);
    std::vector<int> nu(n, 0);
    for (;;) {
        int tot = 0;
        int64_t ex = 0;
        for (int i = 0; i < n; ++i) tot += nu[i], ex += nu[i] * dl[i];
        Homog h = one_homog(G);
        auto den_eps = [&] {
            for (int i = 0; i < n; ++i) h = G.mul(h, G.inv_poch_circle(0, nu[i]));
        };
        switch (kind) {
            case LauricellaKind::A:
                h = G.mul(h, G.poch(p[0], tot));
                for (int i = 0; i < n; ++i) {
                    h = G.mul(h, G.poch(p[1 + i], nu[i]));
                    h = G.mul(h, G.inv_poch_circle(p[1 + n + i], nu[i]));
                }
                den_eps();
                break;
            case LauricellaKind::B:
                for (int i = 0; i < n; ++i) {
                    h = G.mul(h, G.poch(p[i], nu[i]));
                    h = G.mul(h, G.poch(p[n + i], nu[i]));
                }
                den_eps();
                h = G.mul(h, G.inv_poch_circle(p[2 * n], tot));
                break;
            case LauricellaKind::C:
                h = G.mul(h, G.poch(p[0], tot));
                h = G.mul(h, G.poch(p[1], tot));
                for (int i = 0; i < n; ++i) h = G.mul(h, G.inv_poch_circle(p[2 + i], nu[i]));
                den_eps();
                break;
            case LauricellaKind::D:
                h = G.mul(h, G.poch(p[0], tot));
                for (int i = 0; i < n; ++i) h = G.mul(h, G.poch(p[1 + i], nu[i]));
                den_eps();
                h = G.mul(h, G.inv_poch_circle(p[n + 1], tot));
                break;
        }
        h.c = h.c.mul_root(ex);
        acc += h;
        int i = 0;
        while (i < n && ++nu[i] == N) nu[i++] = 0;
        if (i == n) break;
    }
    Integer den = Integer::pow(Integer(1 - G.q()), unsigned(n));
    return acc.scale(1, den);
}

CycloNum lauricella_eval(const FieldPtr& F, LauricellaKind kind, const std::vector<int>& params,
                         const std::vector<int>& lambdas) {
    const GaussAlgebra& G = gauss_algebra(F);
    return G.to_power(lauricella_graded(G, kind, params, lambdas));
}

CycloNum kloosterman(const FieldCtx& F, const std::vector<int>& alphas, int lambda) {
    const int d = int(alphas.size());
    if (d < 1) throw ArityMismatch("Kloosterman sum needs at least one character");
    const int N = F.q - 1, m = F.p * N;
    std::vector<int64_t> cnt(m, 0);
    if (lambda != 0) {
        std::vector<int> s(d - 1, 1);
        for (;;) {
            int last = lambda;
            int64_t tr = 0, ch = 0;
            for (int i = 0; i < d - 1; ++i) {
                last = F.div(last, s[i]);
                tr += F.trace(s[i]);
                ch += int64_t(char_mod(F, alphas[i])) * F.dlog(s[i]);
            }
            tr += F.trace(last);
            ch += int64_t(char_mod(F, alphas[d - 1])) * F.dlog(last);
            cnt[(int64_t(N) * (tr % F.p) + int64_t(F.p) * (ch % N)) % m] += 1;
            int i = 0;
            while (i < d - 1) {
                if (++s[i] < F.q) break;
                s[i] = 1;
                ++i;
            }
            if (i >= d - 1) break;
        }
    }
    std::vector<Integer> c(m);
    for (int i = 0; i < m; ++i) c[i] = cnt[i];
    return CycloNum::from_group_ring(m, std::move(c));
}

}  // namespace hgff
