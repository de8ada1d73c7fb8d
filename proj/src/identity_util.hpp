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

// Shorthand shared by the registry sources.

#include <string>
#include <vector>

#include "hgff/errors.hpp"
#include "hgff/identities.hpp"

namespace hgff::reg {

using B = const Binding&;
using C = const IdCtx&;

inline Slot ch(const std::string& n) { return {n, SlotKind::Char, {}, {}}; }
inline Slot elem(const std::string& n = "lambda") { return {n, SlotKind::Elem, {}, {}}; }
inline Slot part(std::vector<std::string> names, std::function<bool(const FieldCtx&, int)> avail = {}) {
    return {"part", SlotKind::Choice, std::move(names), std::move(avail)};
}

inline std::string need_odd(const FieldCtx& F) { return F.p == 2 ? "needs odd q" : ""; }
inline std::string need_div(const FieldCtx& F, int n) {
    return (F.q - 1) % n ? std::to_string(n) + " does not divide q-1" : "";
}

// Multiset slots b[i0..i0+cap) holding a deg-d multiset: used ones sorted,
// unused ones zero, so every multiset is enumerated once.
inline bool canon(B b, int i0, int d, int cap) {
    for (int i = i0 + 1; i < i0 + d; ++i)
        if (b[i - 1] > b[i]) return false;
    for (int i = i0 + d; i < i0 + cap; ++i)
        if (b[i]) return false;
    return true;
}
inline std::vector<int> take(B b, int i0, int d) { return std::vector<int>(b.begin() + i0, b.begin() + i0 + d); }
inline bool unused(B b, std::initializer_list<int> idx) {
    for (int i : idx)
        if (b[i]) return false;
    return true;
}

// (A)_n and 1/(B)°_n for index lists.
inline Graded poch_set(C c, const std::vector<int>& a, int n) {
    Graded r = c.one();
    for (int x : a) r *= c.G().poch(c.md(x), c.md(n));
    return r;
}
inline Graded inv_poch_circle_set(C c, const std::vector<int>& b, int n) {
    Graded r = c.one();
    for (int x : b) r *= c.G().inv_poch_circle(c.md(x), c.md(n));
    return r;
}
inline std::vector<int> shifted(C c, std::vector<int> a, int64_t s) {
    for (int& x : a) x = c.md(x + s);
    return a;
}
inline std::vector<int> conj(C c, std::vector<int> a) {
    for (int& x : a) x = c.md(-x);
    return a;
}
inline std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Integer-multiple helpers on multisets of indices.
inline int pair_idx(C c, const std::vector<int>& a, const std::vector<int>& b) {
    return pairing(ParamMultiset(c.N(), a), ParamMultiset(c.N(), b));
}
inline bool same_multiset(C c, const std::vector<int>& a, const std::vector<int>& b) {
    return ParamMultiset(c.N(), a) == ParamMultiset(c.N(), b);
}

// 1 - ((1 - x) / (1 + x))^k, the argument of several quadratic formulas.
inline int quad_arg(C c, int x, int k) {
    int t = c.div(c.sub(1, x), c.add(1, x));
    return c.sub(1, c.F().pow(t, k));
}

inline std::vector<std::string> shape_names() {
    std::vector<std::string> r;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) r.push_back(std::to_string(a) + "/" + std::to_string(b));
    return r;
}

}  // namespace hgff::reg
