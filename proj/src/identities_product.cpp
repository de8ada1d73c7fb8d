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

#include <map>
#include <mutex>

#include "identity_util.hpp"

namespace hgff {

using namespace reg;

namespace {

void add_products(std::vector<IdentityDescriptor>& out) {
    out.push_back({"KUMMER_PRODUCT_I", "Thm, \"Recall Kummer's product formulas\" (i)",
                   {ch("alpha"), ch("beta"), elem()},
                   {},
                   [](C c, B b) { return pair_idx(c, {b[0]}, {0, b[1]}) == 0; },
                   [](C c, B b) -> Value { return c.psi(b[2]) * c.FF({b[0]}, {b[1]}, b[2]); },
                   [](C c, B b) -> Value { return c.FF({-b[0] + b[1]}, {b[1]}, c.neg(b[2])); }});

    out.push_back({"KUMMER_PRODUCT_II", "Thm, \"Recall Kummer's product formulas\" (ii)",
                   {ch("alpha"), elem()},
                   need_odd,
                   [](C, B b) { return b[0] != 0; },
                   [](C c, B b) -> Value {
                       int a = b[0], l = b[1];
                       return c.psi(c.div(l, c.el(2))) * c.FF({a}, {2 * a}, l);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], l = b[1];
                       return c.FF({}, {a + c.phi()}, c.div(c.mul(l, l), c.el(16)));
                   }});

    out.push_back({"RAMANUJAN_PRODUCT", "Thm, \"Recall Ramanujan's formula\"",
                   {ch("alpha"), ch("beta"), elem()},
                   need_odd,
                   [](C c, B b) {
                       int a = b[0], be = b[1];
                       return pair_idx(c, {a}, {0, be, be + c.phi(), 2 * be}) == 0;
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2];
                       return c.FF({a}, {2 * be}, l) * c.FF({a}, {2 * be}, c.neg(l));
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2];
                       return c.FF({a, -a + 2 * be}, {2 * be, be, be + c.phi()}, c.div(c.mul(l, l), c.el(4)));
                   }});

    // f = F(a, B; .), g = F(a', B'; .) with B, B' singletons or empty.
    // The sign of the argument follows deg(A' + B'); see the property tests.
    auto fpl_b = [](B b, int part, int slot) {
        return b[0] == part ? std::vector<int>{} : std::vector<int>{b[slot]};
    };
    out.push_back({"FOURIER_PRODUCT_LEMMA", "Lemma, \"alpha, beta, alpha', beta' in P\"",
                   {part({"1/1,1/1", "1/0,1/1", "1/1,1/0"}), ch("alpha"), ch("beta"), ch("alpha2"), ch("beta2"),
                    ch("nu")},
                   {},
                   [](C, B b) { return (b[0] != 1 || b[2] == 0) && (b[0] != 2 || b[4] == 0); },
                   [=](C c, B b) -> Value {
                       std::vector<int> B0 = fpl_b(b, 1, 2), B1 = fpl_b(b, 2, 4);
                       Graded s = c.zero();
                       for (int l = 1; l < c.q(); ++l)
                           s += c.hyp({b[1]}, B0, l) * c.hyp({b[3]}, B1, l) * c.chi(-b[5], l);
                       return s;
                   },
                   [=](C c, B b) -> Value {
                       int a2 = b[3], nu = b[5];
                       std::vector<int> B0 = fpl_b(b, 1, 2), B1 = fpl_b(b, 2, 4);
                       const GaussAlgebra& G = c.G();
                       Graded k(G, G.poch(a2, nu));
                       std::vector<int> top{b[1]}, bot = B0;
                       for (int x : B1) {
                           k = k * Graded(G, G.inv_poch_circle(x, nu));
                           top.push_back(c.md(-x - nu));
                       }
                       bot.push_back(c.md(-a2 - nu));
                       int x = (1 + B1.size()) % 2 ? c.neg(1) : 1;
                       return -(k * c.hyp(top, bot, x));
                   }});

    // tau = alpha beta vphi vpsi (gamma sigma)-bar.
    out.push_back({"WHIPPLE_4F3", "Thm, \"terminating Saalschutzian\"",
                   {ch("alpha"), ch("beta"), ch("vphi"), ch("vpsi"), ch("gamma"), ch("sigma")},
                   {},
                   [](C c, B b) {
                       int a = b[0], be = b[1], f1 = b[2], p1 = b[3], g = b[4], s = b[5];
                       int t = c.md(a + be + f1 + p1 - g - s);
                       return pair_idx(c, {a, be}, {0, g}) == 0 && pair_idx(c, {f1, p1}, {s, t}) == 0;
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], f1 = b[2], p1 = b[3], g = b[4], s = b[5];
                       int t = c.md(a + be + f1 + p1 - g - s);
                       return c.FF({a, be, f1, p1}, {g, s, t}, 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], f1 = b[2], p1 = b[3], g = b[4], s = b[5];
                       int t = c.md(a + be + f1 + p1 - g - s);
                       const GaussAlgebra& G = c.G();
                       int nf = c.md(-f1);
                       Graded k(G, G.mul(G.mul(G.poch(c.md(s - p1), nf), G.poch(c.md(t - p1), nf)),
                                         G.mul(G.inv_poch_circle(s, nf), G.inv_poch_circle(t, nf))));
                       Graded r = k * c.FF({-a + g, -be + g, f1, p1}, {g, -s + f1 + p1, -t + f1 + p1}, 1);
                       Graded qd = c.qpow(-int(c.delta(a + be - g)));
                       r += qd * c.frac({gc(g), gc(s), gc(t)}, {gp(a), gp(be), gp(f1), gp(p1)});
                       r -= qd * c.chi(g + f1 + p1, c.neg(1)) *
                            c.frac({gp(a - g), gp(be - g), gc(g), gc(s), gc(t)},
                                   {gp(f1), gp(p1), gp(s - f1), gp(t - f1), gp(s - p1), gp(t - p1)});
                       return r;
                   }});

    out.push_back({"CLAUSEN", "Thm, \"Recall Clausen's product formula\"",
                   {part({"main", "at-one", "square"}), ch("alpha"), ch("beta"), elem()},
                   need_odd,
                   [](C c, B b) {
                       int a = b[1], be = b[2], l = b[3];
                       if (pair_idx(c, {2 * a, 2 * be, a + be}, {0}) != 0 || pair_idx(c, {a}, {be + c.phi()}) != 0)
                           return false;
                       if (b[0] == 1) return l == 0;
                       return l != 0 && (b[0] == 0 || l != 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], l = b[3], f = c.phi();
                       if (b[0] == 1) return c.FF({2 * a, 2 * be, a + be}, {2 * a + 2 * be, a + be + f}, 1);
                       Graded h = c.FF({a, be}, {a + be + f}, l);
                       Graded v = h * h;
                       if (b[0] == 0 && l == 1) {
                           Graded k = c.frac({gc(a + be + f), gp(f)}, {gp(a), gp(be)});
                           v += k * k;
                       }
                       return v;
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], l = b[3], f = c.phi();
                       if (b[0] == 1) {
                           Graded k1 = c.frac({gc(a + be + f), gp(f)}, {gp(a), gp(be)});
                           Graded k2 = c.frac({gc(a + be + f), gp(f)}, {gp(a + f), gp(be + f)});
                           return k1 * k1 + k2 * k2;
                       }
                       if (b[0] == 2) {
                           Graded h = c.FF({a + f, be + f}, {a + be + f}, l);
                           return h * h;
                       }
                       int il = c.inv(l);
                       Graded k = c.frac({gc(a + be + f), gc(a + be + f)}, {gp(a), gp(be), gp(a + f), gp(be + f)});
                       return c.FF({2 * a, 2 * be, a + be}, {2 * a + 2 * be, a + be + f}, l) +
                              c.qpow(1) * k * c.chi(a + be, il) * c.chi(f, c.sub(1, il));
                   }});
}

// Norms from k_2 down to k, as base discrete logs (-1 for zero).
struct NormLift {
    FieldPtr ext;
    std::vector<int> ndlog;
};

const NormLift& norm_lift(C c) {
    static std::mutex mu;
    static std::map<const FieldCtx*, NormLift> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(&c.F());
    if (it != cache.end()) return it->second;
    NormLift nl;
    nl.ext = build_field(c.p(), 2 * c.F().e);
    FieldEmbedding emb(c.field_ptr(), nl.ext);
    nl.ndlog.resize(nl.ext->q);
    for (int x = 0; x < nl.ext->q; ++x) nl.ndlog[x] = x ? c.F().dlog(emb.norm(x)) : -1;
    return cache.emplace(&c.F(), std::move(nl)).first->second;
}

void add_norm_lift(std::vector<IdentityDescriptor>& out) {
    out.push_back({"DH_NORM_LIFT", "Appendix, \"another well-known formula of Davenport-Hasse\"",
                   {ch("alpha"), ch("nu")},
                   [](const FieldCtx& F) {
                       return int64_t(F.q) * F.q > field_bound() ? std::string("k_2 exceeds field bound") : std::string();
                   },
                   [](C, B b) { return b[0] != 0 || b[1] != 0; },
                   [](C c, B b) -> Value {
                       const NormLift& nl = norm_lift(c);
                       const FieldCtx& E = *nl.ext;
                       const int N = c.N();
                       std::vector<Integer> cnt(N);
                       for (int x = 2; x < E.q; ++x) {
                           int y = E.sub(1, x);
                           int64_t e = int64_t(b[0]) * nl.ndlog[x] + int64_t(b[1]) * nl.ndlog[y];
                           cnt[e % N] -= 1;
                       }
                       return CycloNum::from_group_ring(N, std::move(cnt));
                   },
                   [](C c, B b) -> Value {
                       const CycloNum& j = c.jac2(b[0], b[1]);
                       return j * j;
                   }});
}

}  // namespace

void register_product_identities(std::vector<IdentityDescriptor>& out) {
    add_products(out);
    add_norm_lift(out);
}

}  // namespace hgff
