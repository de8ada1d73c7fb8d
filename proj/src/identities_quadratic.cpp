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

Slot root_slot() { return {"root", SlotKind::Choice, {"first", "second"}, {}}; }

// 1 - ((1 - x) / (1 + 3x))^2
int rmo_arg(C c, int x) {
    int t = c.div(c.sub(1, x), c.add(1, c.mul(c.el(3), x)));
    return c.sub(1, c.mul(t, t));
}

void add_quadratic(std::vector<IdentityDescriptor>& out) {
    auto h1 = [](C c, B b) { return pair_idx(c, {2 * b[0], b[1]}, {0}) == 0; };

    out.push_back({"QUAD_I", "Thm, \"(alpha^2+beta,e)=0\" (i)",
                   {ch("alpha"), ch("beta"), elem()},
                   need_odd,
                   [=](C c, B b) { return h1(c, b) && b[2] != c.neg(1); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2];
                       return c.chi(2 * a, c.add(1, l)) * c.FF({2 * a, be}, {2 * a - be}, l);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2];
                       return c.FF({a, a + c.phi()}, {2 * a - be}, quad_arg(c, l, 2));
                   }});

    out.push_back({"QUAD_II", "Thm, \"(alpha^2+beta,e)=0\" (ii)",
                   {ch("alpha"), ch("beta"), elem()},
                   need_odd,
                   [=](C c, B b) { return h1(c, b) && b[2] != c.neg(1); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2], f = c.phi();
                       return c.chi(2 * a, c.add(1, l)) * c.FF({a, a + f}, {be + f}, c.mul(l, l));
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2];
                       return c.FF({2 * a, be}, {2 * be}, quad_arg(c, l, 1));
                   }});

    out.push_back({"QUAD_COR", "Cor, \"(alpha^2+beta^2+alpha beta-bar phi,e)=0\"",
                   {part({"i", "ii"}), ch("alpha"), ch("beta"), elem()},
                   need_odd,
                   [](C c, B b) {
                       int a = b[1], be = b[2], l = b[3];
                       if (pair_idx(c, {2 * a, 2 * be, a - be + c.phi()}, {0}) != 0) return false;
                       if (b[0] == 0) return l != 1 && l != c.inv(c.el(2));
                       return l != 1 && l != c.neg(1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], l = b[3], f = c.phi();
                       if (b[0] == 0) return c.FF({2 * a, 2 * be}, {a + be + f}, l);
                       return c.chi(2 * a, c.add(1, l)) * c.FF({2 * a, a - be + f}, {a + be + f}, c.neg(l));
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], l = b[3], f = c.phi();
                       if (b[0] == 0) {
                           int t = c.sub(1, c.mul(c.el(2), l));
                           return c.FF({a, be}, {a + be + f}, c.sub(1, c.mul(t, t)));
                       }
                       return c.FF({a, be}, {a + be + f}, quad_arg(c, l, 2));
                   }});

    out.push_back({"QUAD_SQRT", "Thm, \"Recall the formula of Gauss\"",
                   {ch("alpha"), ch("beta"), elem()},
                   need_odd,
                   [](C c, B b) {
                       int a = b[0], be = b[1];
                       return pair_idx(c, {a}, {0, be + c.phi(), 2 * be}) == 0 && be != 0 && b[2] != c.neg(1);
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2], f = c.phi();
                       return c.chi(2 * a, c.add(1, l)) * c.FF({a, a - be + f}, {be + f}, c.mul(l, l));
                   },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], l = b[2];
                       return c.FF({a, be}, {2 * be}, quad_arg(c, l, 2));
                   }});

    out.push_back({"RMO_CUBIC", "Thm, \"Ramanujan-Matsumoto-Ohara\"",
                   {root_slot(), ch("alpha"), elem()},
                   [](const FieldCtx& F) {
                       std::string w = need_odd(F);
                       return w.empty() ? need_div(F, 3) : w;
                   },
                   [](C c, B b) {
                       int l = b[2];
                       return !c.delta(6 * b[1]) && l != c.neg(1) && c.add(1, c.mul(c.el(3), l)) != 0;
                   },
                   [](C c, B b) -> Value {
                       int r = c.chars_of_order(3)[b[0]], a = b[1], l = b[2], f = c.phi();
                       return c.chi(6 * a, c.add(1, c.mul(c.el(3), l))) *
                              c.FF({3 * a, 3 * a + f}, {2 * a + f + r}, c.mul(l, l));
                   },
                   [](C c, B b) -> Value {
                       int r = c.chars_of_order(3)[b[0]], a = b[1], l = b[2], f = c.phi();
                       return c.FF({3 * a, 3 * a + f}, {4 * a + 2 * r}, rmo_arg(c, l));
                   }});

    auto qavail = [](const FieldCtx& F, int i) { return i == 1 || (F.q - 1) % 3 == 0; };
    out.push_back({"QUARTIC_COR", "Cor, \"sigma be a quartic character\"",
                   {part({"i", "ii"}, qavail), root_slot(), ch("alpha"), elem()},
                   [](const FieldCtx& F) { return need_div(F, 4); },
                   [](C c, B b) {
                       int a = b[2], l = b[3], f = c.phi();
                       int l2 = c.mul(l, l);
                       if (b[0] == 0) {
                           int r = c.chars_of_order(3)[b[1]];
                           return pair_idx(c, {3 * a}, {0}) == 0 && pair_idx(c, {2 * a}, {f + r}) == 0 &&
                                  l != c.neg(1) && l2 != c.neg(1);
                       }
                       int s = c.chars_of_order(4)[b[1]];
                       return pair_idx(c, {2 * a, a + s}, {0}) == 0 && c.mul(l2, l2) != 1;
                   },
                   [](C c, B b) -> Value {
                       int a = b[2], l = b[3], f = c.phi();
                       int l2 = c.mul(l, l);
                       if (b[0] == 0) {
                           int r = c.chars_of_order(3)[b[1]];
                           return c.chi(12 * a, c.add(1, l)) * c.FF({3 * a, 2 * a + f - r}, {a + f + r}, c.mul(l2, l2));
                       }
                       int s = c.chars_of_order(4)[b[1]];
                       return c.chi(4 * a, c.add(1, l)) * c.FF({2 * a, a + s}, {a - s}, c.neg(l2));
                   },
                   [](C c, B b) -> Value {
                       int a = b[2], l = b[3], f = c.phi();
                       if (b[0] == 0) {
                           int r = c.chars_of_order(3)[b[1]];
                           return c.FF({3 * a, 2 * a + f - r}, {4 * a + r}, quad_arg(c, l, 4));
                       }
                       int s = c.chars_of_order(4)[b[1]];
                       return c.FF({a, a + s}, {2 * a + f}, quad_arg(c, l, 4));
                   }});

    out.push_back({"WHIPPLE_QUAD", "Thm, \"quadratic transformation formula\"",
                   {part({"main", "at-minus-one"}), ch("alpha"), ch("beta"), ch("gamma"), elem()},
                   need_odd,
                   [](C c, B b) {
                       int a = b[1], be = b[2], g = b[3], l = b[4];
                       if (pair_idx(c, {2 * a, be, g}, {0}) != 0 || c.md(2 * a) == c.md(be + g)) return false;
                       return b[0] == 0 ? l != c.neg(1) : l == 0;
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], g = b[3], l = b[4];
                       Graded k = c.frac({gc(2 * a - be), gc(2 * a - g)}, {gp(2 * a), gp(2 * a - be - g)});
                       int x = b[0] == 0 ? c.neg(l) : c.neg(1);
                       Graded v = c.FF({2 * a, be, g}, {2 * a - be, 2 * a - g}, x);
                       if (b[0] == 1 || l == 1) v -= k;
                       return v;
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], g = b[3], l = b[4], f = c.phi();
                       std::vector<int> top{a, a + f, 2 * a - be - g}, bot{2 * a - be, 2 * a - g};
                       if (b[0] == 1) return c.chi(-a, c.el(4)) * c.FF(top, bot, 1);
                       return c.chi(-2 * a, c.add(1, l)) * c.FF(top, bot, quad_arg(c, l, 2));
                   }});
}

}  // namespace

void register_quadratic_identities(std::vector<IdentityDescriptor>& out) { add_quadratic(out); }

}  // namespace hgff
