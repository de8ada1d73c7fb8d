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

#include "identity_util.hpp"

namespace hgff {

using namespace reg;

namespace {

// c(beta, gamma) of the nearly-poised lemma.
Graded c_const(C c, int b, int g) {
    const int d = c.delta(-b + g);
    Integer q = c.q();
    Graded k = c.num(Integer(1) + Integer(d) * q, Integer::pow(q, unsigned(d)));
    Graded w = c.num((Integer(1) - q) * (Integer(1) - q), q);
    return k * w * c.frac({gc(b + g)}, {gp(b), gp(g)});
}

void add_2f1_values(std::vector<IdentityDescriptor>& out) {
    out.push_back({"EULER_GAUSS", "Thm, \"1+q^delta(gamma)(1-q)\"",
                   {ch("alpha"), ch("beta"), ch("gamma")},
                   {},
                   {},
                   [](C c, B b) -> Value { return c.FF({b[0], b[1]}, {b[2]}, 1); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2];
                       if (!same_multiset(c, {a, be}, {0, g}))
                           return c.frac({gc(g), gp(-a - be + g)}, {gc(-a + g), gc(-be + g)});
                       return c.one() + c.qpow(c.delta(g)) * c.num(1 - c.q());
                   }});

    out.push_back({"EULER_GAUSS_REMARK", "Remark, \"Vandermonde's theorem\"",
                   {part({"degenerate", "vandermonde"}), ch("alpha"), ch("beta"), ch("gamma")},
                   {},
                   [](C c, B b) {
                       if (b[0] == 0) return same_multiset(c, {b[1], b[2]}, {0, b[3]});
                       return pair_idx(c, {b[1]}, {0, b[3]}) == 0;
                   },
                   [](C c, B b) -> Value {
                       // In the Vandermonde form the beta slot carries nu and the parameter is nu-bar.
                       int be = b[0] == 0 ? b[2] : c.md(-b[2]);
                       return c.FF({b[1], be}, {b[3]}, 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], g = b[3];
                       if (b[0] == 1) return c.poch_ratio(-a + g, g, be);
                       Integer q = c.q();
                       Graded corr = c.num((Integer(1) + Integer(c.delta(g)) * q) * (Integer(1) - q) * (Integer(1) - q), q);
                       return c.frac({gc(g), gp(-a - be + g)}, {gc(-a + g), gc(-be + g)}) - corr;
                   }});

    out.push_back({"MULTINOMIAL", "Cor, \"multinomial theorem for Pochhammer symbols\"",
                   {part({"2", "3"}), ch("a1"), ch("a2"), ch("a3"), ch("nu")},
                   {},
                   [](C c, B b) {
                       if (c.delta(b[1] + b[2])) return false;
                       return b[0] == 0 ? b[3] == 0 : !c.delta(b[1] + b[2] + b[3]);
                   },
                   [](C c, B b) -> Value {
                       const int N = c.N(), nu = b[4];
                       Graded s = c.zero();
                       auto t = [&](int a, int n) { return c.poch_ratio(a, 0, n); };
                       if (b[0] == 0) {
                           for (int n1 = 0; n1 < N; ++n1) s += t(b[1], n1) * t(b[2], nu - n1);
                           return s.scale(1, Integer(1 - c.q()) * Integer(1 - c.q()));
                       }
                       for (int n1 = 0; n1 < N; ++n1)
                           for (int n2 = 0; n2 < N; ++n2) s += t(b[1], n1) * t(b[2], n2) * t(b[3], nu - n1 - n2);
                       Integer d = Integer(1 - c.q());
                       return s.scale(1, d * d * d);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0] == 0 ? b[1] + b[2] : b[1] + b[2] + b[3];
                       return c.poch_ratio(a, 0, b[4]).scale(1, 1 - c.q());
                   }});

    auto kavail = [](const FieldCtx& F, int i) { return i == 0 ? F.p == 2 : F.p != 2; };
    out.push_back({"KUMMER_MINUS1", "Thm, \"Recall Kummer's formula\"",
                   {part({"i", "ii", "iii"}, kavail), ch("alpha"), ch("beta")},
                   {},
                   [](C, B b) { return b[0] != 2 || b[1] % 2 == 1; },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], m = c.neg(1);
                       if (b[0] == 2) return c.FF({a, be}, {a - be}, m);
                       return c.FF({2 * a, be}, {2 * a - be}, m);
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2];
                       if (b[0] == 2) return c.zero();
                       if (b[0] == 0) {
                           if (be) return c.frac({gc(2 * a - be), gp(a)}, {gp(2 * a), gc(a - be)});
                           return c.one() + c.qpow(c.delta(a)) * c.num(1 - c.q());
                       }
                       Graded s = c.zero();
                       for (int a2 : {a, a + c.phi()}) s += c.frac({gc(2 * a - be), gp(a2)}, {gp(2 * a), gc(a2 - be)});
                       return s;
                   }});
}

void add_3f2_values(std::vector<IdentityDescriptor>& out) {
    out.push_back({"THOMAE", "Thm, \"fundamental theorem on 3F2(1)\"",
                   {ch("alpha"), ch("beta"), ch("gamma"), ch("vphi"), ch("vpsi")},
                   {},
                   [](C c, B b) { return pair_idx(c, {b[0]}, {b[3], b[4]}) == 0 && pair_idx(c, {0}, {b[1], b[2]}) == 0; },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f = b[3], p = b[4];
                       return c.frac({gp(a)}, {gc(f), gc(p)}) * c.FF({a, be, g}, {f, p}, 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f = b[3], p = b[4];
                       int s = c.md(-a - be - g + f + p);
                       return c.frac({gp(s)}, {gc(be + s), gc(g + s)}) * c.FF({s, -a + f, -a + p}, {be + s, g + s}, 1);
                   }});

    out.push_back({"SHEPPARD", "Cor, \"analogue of Sheppard's formula\"",
                   {ch("alpha"), ch("beta"), ch("gamma"), ch("vphi"), ch("vpsi")},
                   {},
                   [](C c, B b) {
                       int s = c.md(-b[0] - b[1] - b[2] + b[3] + b[4]);
                       return pair_idx(c, {b[0], s}, {0}) == 0 && pair_idx(c, {b[1], b[2]}, {b[3], b[4]}) == 0;
                   },
                   [](C c, B b) -> Value { return c.FF({b[0], b[1], b[2]}, {b[3], b[4]}, 1); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f = b[3], p = b[4];
                       int s = c.md(-a - be - g + f + p);
                       Graded k = c.frac({gp(-be - g + f), gc(f), gp(-be - g + p), gc(p)},
                                         {gp(-be + f), gp(-g + f), gp(-be + p), gp(-g + p)});
                       return k * c.FF({-s, be, g}, {be + g - f, be + g - p}, 1);
                   }});

    out.push_back({"NEARLY_KEY_LEMMA", "Lemma, \"key role in computing nearly-poised\"",
                   {ch("vphi"), ch("beta"), ch("gamma"), ch("nu")},
                   {},
                   {},
                   [](C c, B b) -> Value {
                       int f = b[0], be = b[1], g = b[2], nu = b[3];
                       const GaussAlgebra& G = c.G();
                       Graded k = c.frac({gc(f), gp(-be - g + f)}, {gc(-be + f), gc(-g + f)});
                       Graded r(G, G.mul(G.mul(G.poch(be, nu), G.poch(g, nu)),
                                         G.mul(G.inv_poch_circle(c.md(-be + f), nu), G.inv_poch_circle(c.md(-g + f), nu))));
                       return k * r;
                   },
                   [](C c, B b) -> Value {
                       int f = b[0], be = b[1], g = b[2], nu = b[3];
                       Graded s = c.zero();
                       for (int mu = 0; mu < c.N(); ++mu) {
                           Graded t = c.poch_ratio(be, 0, mu) * c.poch_ratio(g, f, mu) * c.poch_ratio(-mu, f + mu, nu);
                           s += t;
                       }
                       s = s.scale(1, 1 - c.q()) * c.chi(nu, c.neg(1));
                       if (c.md(be + g) == f && (c.md(nu) == c.md(-be) || c.md(nu) == c.md(-g))) s += c_const(c, be, g);
                       return s;
                   }});

    auto sqr = [](C c, int a) { return std::vector<int>{a, c.md(a + c.phi())}; };

    out.push_back({"DIXON", "Thm, \"Dixon's formula for well-poised\"",
                   {ch("alpha"), ch("beta"), ch("gamma")},
                   need_odd,
                   [=](C c, B b) {
                       int a = b[0], be = b[1], g = b[2];
                       if (c.md(2 * a) == c.md(be + g)) return false;
                       for (int a2 : sqr(c, a))
                           if (same_multiset(c, {be, g}, {0, a2})) return false;
                       return true;
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2];
                       return c.FF({2 * a, be, g}, {2 * a - be, 2 * a - g}, 1);
                   },
                   [=](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2];
                       Graded s = c.zero();
                       for (int a2 : sqr(c, a))
                           s += c.frac({gc(2 * a - be), gc(2 * a - g), gp(a2), gp(a2 - be - g)},
                                       {gp(2 * a), gp(2 * a - be - g), gc(a2 - be), gc(a2 - g)});
                       return s;
                   }});

    out.push_back({"WATSON", "Thm, \"Dixon's formula for well-poised\" (ii)",
                   {ch("alpha"), ch("beta"), ch("gamma")},
                   need_odd,
                   [](C c, B b) {
                       int a = b[0], be = b[1], g = b[2], f = c.phi();
                       if (pair_idx(c, {-a + be + f, g}, {0}) != 0) return false;
                       return pair_idx(c, {2 * a, 2 * be, g}, {0, a + be + f, 2 * g}) <= 1;
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f = c.phi();
                       return c.FF({2 * a, 2 * be, g}, {a + be + f, 2 * g}, 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f = c.phi();
                       Graded s = c.zero();
                       for (int nu : {0, f})
                           s += c.frac({gp(f), gc(g + f), gc(a + be + f), gp(-a - be + g + f)},
                                       {gp(a + nu), gc(-a + g + nu), gp(be + nu), gc(-be + g + nu)});
                       return s;
                   }});

    // beta = phi alpha-bar and gamma = vphi vpsi phi are determined by the hypothesis.
    out.push_back({"WHIPPLE_3F2", "Thm, \"Dixon's formula for well-poised\" (iii)",
                   {ch("alpha"), ch("vphi"), ch("vpsi")},
                   need_odd,
                   [](C c, B b) {
                       int a = b[0], f1 = b[1], p1 = b[2], f = c.phi();
                       int be = c.md(f - a), g = c.md(f1 + p1 - f);
                       if (pair_idx(c, {g}, {0, 2 * f1, 2 * p1}) != 0) return false;
                       return pair_idx(c, {2 * a, 2 * be}, {0, 2 * f1, 2 * p1}) <= 1;
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], f1 = b[1], p1 = b[2], f = c.phi();
                       int be = c.md(f - a), g = c.md(f1 + p1 - f);
                       return c.FF({2 * a, 2 * be, g}, {2 * f1, 2 * p1}, 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], f1 = b[1], p1 = b[2], f = c.phi();
                       int be = c.md(f - a);
                       Graded s = c.zero();
                       for (int nu : {0, f})
                           s += c.frac({gc(f1), gc(f1 + f), gc(p1), gc(p1 + f)},
                                       {gc(a + f1 + nu), gc(a + p1 + nu), gc(be + f1 + nu), gc(be + p1 + nu)});
                       return s;
                   }});

    // vpsi = alpha beta gamma vphi-bar.
    out.push_back({"SAALSCHUTZ", "Thm, \"Recall Saalschutz's formula\"",
                   {ch("alpha"), ch("beta"), ch("gamma"), ch("vphi")},
                   {},
                   [](C c, B b) {
                       int p1 = c.md(b[0] + b[1] + b[2] - b[3]);
                       return !same_multiset(c, {b[0], b[1], b[2]}, {0, b[3], p1});
                   },
                   [](C c, B b) -> Value {
                       int p1 = c.md(b[0] + b[1] + b[2] - b[3]);
                       return c.FF({b[0], b[1], b[2]}, {b[3], p1}, 1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f1 = b[3];
                       int p1 = c.md(a + be + g - f1);
                       return c.frac({gc(f1), gp(a - p1), gp(be - p1), gp(g - p1)}, {gp(-p1), gc(-a + f1), gc(-be + f1), gc(-g + f1)}) +
                              c.frac({gc(f1), gc(p1)}, {gp(a), gp(be), gp(g)});
                   }});

    out.push_back({"CONNECTION_INTEGRATED", "Cor, \"do not exist over the complex\"",
                   {ch("alpha"), ch("beta"), ch("gamma"), ch("vphi"), ch("vpsi")},
                   {},
                   [](C c, B b) {
                       return pair_idx(c, {b[0], b[1]}, {0, b[2]}) == 0 && pair_idx(c, {b[3], b[4]}, {0}) == 0;
                   },
                   [](C c, B b) -> Value { return c.FF({b[0], b[1], b[3]}, {b[2], b[3] + b[4]}, 1); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], f1 = b[3], p1 = b[4];
                       return c.frac({gc(g), gp(-a - be + g)}, {gp(-a + g), gp(-be + g)}) *
                              c.FF({a, be, p1}, {a + be - g, f1 + p1}, 1);
                   }});
}

void add_nearly_poised(std::vector<IdentityDescriptor>& out) {
    auto prefactor = [](C c, int be, int g, int f2) {
        return c.frac({gc(f2), gp(-be - g + f2)}, {gc(-be + f2), gc(-g + f2)});
    };

    out.push_back({"NEARLY_3F2", "Thm, \"values 3F2(-1) and 4F3(1)\"",
                   {part({"i", "ii"}), ch("alpha"), ch("beta"), ch("gamma"), ch("vphi")},
                   need_odd,
                   [](C c, B b) {
                       int a = b[1], f1 = b[4];
                       if (b[0] == 0) return pair_idx(c, {2 * a}, {0, 2 * f1}) == 0;
                       return a == 0 && !c.delta(2 * f1);
                   },
                   [=](C c, B b) -> Value {
                       int a = b[1], be = b[2], g = b[3], f1 = b[4];
                       int top = b[0] == 0 ? 2 * a : 2 * f1;
                       return prefactor(c, be, g, 2 * f1) * c.FF({top, be, g}, {-be + 2 * f1, -g + 2 * f1}, c.neg(1));
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], g = b[3], f1 = b[4], f = c.phi();
                       bool dl = c.delta(-be - g + 2 * f1);
                       if (b[0] == 0) {
                           Graded r = c.FF({-a + f1, -a + f1 + f, be, g}, {-2 * a + 2 * f1, f1, f1 + f}, 1);
                           if (dl) {
                               Graded s = c.zero();
                               std::vector<int> nus{c.md(-be)};
                               if (c.md(-g) != nus[0]) nus.push_back(c.md(-g));
                               for (int nu : nus) s += c.poch_ratio(2 * a, 0, nu) * c.chi(nu, c.neg(1));
                               r += c_const(c, be, g).scale(1, 1 - c.q()) * s;
                           }
                           return r;
                       }
                       Graded r = c.FF({f, be, g}, {f1, f1 + f}, 1) + c.one();
                       if (dl) {
                           int d = c.delta(-be + g);
                           Integer qk = Integer::pow(Integer(c.q()), unsigned(1 + d));
                           r += c.num((Integer(2 - d)) * (Integer(1) - qk), qk);
                       }
                       return r;
                   }});

    out.push_back({"NEARLY_COR", "Cor, proof anchor \"Set gamma=phi in Theorem\"",
                   {ch("alpha"), ch("beta"), ch("vphi")},
                   need_odd,
                   [](C c, B b) {
                       return pair_idx(c, {2 * b[0]}, {0, 2 * b[2]}) == 0 && b[1] != b[2];
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], f1 = b[2];
                       return c.frac({gc(2 * f1), gp(-be + f1)}, {gc(-be + 2 * f1), gc(f1)}) *
                              c.FF({2 * a, be}, {-be + 2 * f1}, c.neg(1));
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], f1 = b[2], f = c.phi();
                       return c.FF({-a + f1, -a + f1 + f, be}, {-2 * a + 2 * f1, f1 + f}, 1);
                   }});

    out.push_back({"NEARLY_4F3", "Thm, \"(alpha beta+alpha gamma+beta gamma,phi^2)=0\"",
                   {part({"i", "ii"}), ch("sigma"), ch("alpha"), ch("beta"), ch("gamma"), ch("vphi")},
                   need_odd,
                   [](C c, B b) {
                       int s = b[1], a = b[2], be = b[3], g = b[4], f1 = b[5];
                       if (pair_idx(c, {a + be, a + g, be + g}, {2 * f1}) != 0) return false;
                       if (b[0] == 0) return pair_idx(c, {2 * s}, {0, 2 * f1}) == 0;
                       return s == 0 && !c.delta(2 * f1);
                   },
                   [](C c, B b) -> Value {
                       int s = b[1], a = b[2], be = b[3], g = b[4], f1 = b[5];
                       int top = b[0] == 0 ? 2 * s : 2 * f1;
                       Graded k = c.frac({gp(-a - be + 2 * f1), gp(-a - g + 2 * f1), gp(-be - g + 2 * f1)},
                                         {gc(-a + 2 * f1), gc(-be + 2 * f1), gc(-g + 2 * f1)});
                       return k * c.FF({top, a, be, g}, {-a + 2 * f1, -be + 2 * f1, -g + 2 * f1}, 1);
                   },
                   [](C c, B b) -> Value {
                       int s = b[1], a = b[2], be = b[3], g = b[4], f1 = b[5], f = c.phi();
                       Graded k = c.frac({gp(-a - be - g + 2 * f1)}, {gc(2 * f1)});
                       Graded tail = c.frac({gc(-a), gc(-be), gc(-g)}, {});
                       if (b[0] == 0) {
                           Graded h = c.FF({-s + f1, -s + f1 + f, a, be, g}, {-2 * s + 2 * f1, f1, f1 + f, a + be + g - 2 * f1}, 1);
                           // the usual g0 g0 g0 / q tail fails; sweeps give sigma-bar(4) / q^2
                           return k * h - c.chi(-s, c.el(4)) * tail.scale(1, Integer(c.q()) * Integer(c.q()));
                       }
                       Graded h = c.FF({f, a, be, g}, {f1, f1 + f, a + be + g - 2 * f1}, 1) + c.one();
                       Graded t4 = c.chi(-f1, c.el(4)) * tail.scale(1, Integer(c.q()) * Integer(c.q()));
                       return k * h - t4;
                   }});
}

}  // namespace

void register_summation_identities(std::vector<IdentityDescriptor>& out) {
    add_2f1_values(out);
    add_3f2_values(out);
    add_nearly_poised(out);
}

}  // namespace hgff
