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
#include <stdexcept>

#include "identity_util.hpp"

namespace hgff {

using namespace reg;

namespace {

// Divisor choices n = 1..24 for formulas indexed by n | q-1.
std::vector<std::string> divisor_names(int lo) {
    std::vector<std::string> r;
    for (int n = lo; n <= 24; ++n) r.push_back(std::to_string(n));
    return r;
}
Slot divisor_slot(const std::string& name, int lo) {
    return {name, SlotKind::Choice, divisor_names(lo), [lo](const FieldCtx& F, int i) { return (F.q - 1) % (i + lo) == 0; }};
}

std::vector<std::string> kl_shapes() {
    std::vector<std::string> r;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n) r.push_back(std::to_string(m) + "/" + std::to_string(n));
    return r;
}
std::pair<int, int> kl_shape(int i) {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n)
            if (i-- == 0) return {m, n};
    return {0, 0};
}

// j(nu^-1, ..., nu^-1) with n entries, for every nu; direct count when cheap.
const std::vector<CycloNum>& dwork_jacobi(C c, int n) {
    static std::mutex mu;
    static std::map<std::pair<const FieldCtx*, int>, std::vector<CycloNum>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(&c.F(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double work = 1;
    for (int i = 1; i < n; ++i) work *= c.q();
    std::vector<CycloNum> v(c.N());
    for (int nu = 0; nu < c.N(); ++nu) {
        std::vector<int> js(n, c.md(-nu));
        v[nu] = work <= 5000 ? jacobi_brute(c.F(), js) : jacobi(c.field_ptr(), js);
    }
    return cache.emplace(key, std::move(v)).first->second;
}

// Exponent of chi(x) for x != 0.
inline int64_t ex(C c, int64_t j, int x) { return c.md(j) * int64_t(c.F().dlog(x)); }

Value group_ring(C, int m, const std::vector<int64_t>& cnt) {
    std::vector<Integer> v(cnt.begin(), cnt.end());
    return CycloNum::from_group_ring(m, std::move(v));
}

void add_shift_family(std::vector<IdentityDescriptor>& out) {
    // Parameter slots a1 a2 b1 b2 with shape dA/dB.
    auto shape_ok = [](B b) { return canon(b, 1, b[0] / 3, 2) && canon(b, 3, b[0] % 3, 2); };
    auto A = [](B b) { return take(b, 1, b[0] / 3); };
    auto Bm = [](B b) { return take(b, 3, b[0] % 3); };

    out.push_back({"SHIFT", "Prop, \"reduced to a 2F1-function\"",
                   {part(shape_names()), ch("a1"), ch("a2"), ch("b1"), ch("b2"), ch("chi"), elem()},
                   {},
                   [=](C, B b) { return shape_ok(b); },
                   [=](C c, B b) -> Value { return c.hyp(A(b), Bm(b), b[6]); },
                   [=](C c, B b) -> Value {
                       int x = b[5];
                       Graded r = poch_set(c, A(b), x) * inv_poch_circle_set(c, Bm(b), x) * c.chi(x, b[6]);
                       return r * c.hyp(shifted(c, A(b), x), shifted(c, Bm(b), x), b[6]);
                   }});

    out.push_back({"REVERSAL", "Prop, \"Exchanging the numerator and denominator\"",
                   {part(shape_names()), {"form", SlotKind::Choice, {"inverse", "conjugate"}, {}}, ch("a1"),
                    ch("a2"), ch("b1"), ch("b2"), elem()},
                   {},
                   [](C, B b) {
                       return canon(b, 2, b[0] / 3, 2) && canon(b, 4, b[0] % 3, 2) && b[6] != 0;
                   },
                   [](C c, B b) -> Value { return c.hyp(take(b, 4, b[0] % 3), take(b, 2, b[0] / 3), b[6]); },
                   [](C c, B b) -> Value {
                       auto a = take(b, 2, b[0] / 3), bb = take(b, 4, b[0] % 3);
                       int li = c.inv(b[6]);
                       if (b[1] == 1) return c.hyp(a, bb, li).conj();
                       int s = (a.size() + bb.size()) % 2 ? c.neg(li) : li;
                       return c.hyp(conj(c, a), conj(c, bb), s);
                   }});

    out.push_back({"NORM_IDENTITY", "Prop, \"Apply the Plancherel formula\"",
                   {part(shape_names()), ch("a1"), ch("a2"), ch("b1"), ch("b2")},
                   {},
                   [=](C, B b) { return shape_ok(b); },
                   [=](C c, B b) -> Value {
                       Graded s = c.zero();
                       for (int l = 0; l < c.q(); ++l) {
                           Graded f = c.hyp(A(b), Bm(b), l);
                           s += f * f.conj();
                       }
                       return s;
                   },
                   [=](C c, B b) -> Value {
                       std::vector<int> ab = cat(A(b), Bm(b));
                       Graded s = c.zero();
                       for (int nu = 0; nu < c.N(); ++nu) {
                           int e = 0;
                           for (int x : ab) e += (x == 0) - (x == nu);
                           s += c.qpow(e);
                       }
                       return s.scale(1, c.N());
                   }});
}

void add_reduction_family(std::vector<IdentityDescriptor>& out) {
    out.push_back({"REDUCTION", "Thm, \"1-q^{-(nu,gamma)}\"",
                   {part({"1", "2"}), ch("alpha"), ch("beta"), ch("g1"), ch("g2"), elem()},
                   {},
                   [](C, B b) { return b[0] == 0 ? b[4] == 0 : b[3] <= b[4]; },
                   [](C c, B b) -> Value {
                       std::vector<int> g = take(b, 3, b[0] + 1);
                       return c.hyp(cat({b[1]}, g), cat({b[2]}, g), b[5]);
                   },
                   [](C c, B b) -> Value {
                       std::vector<int> g = take(b, 3, b[0] + 1);
                       int ge = 0;
                       for (int x : g) ge += x == 0;
                       Graded corr = c.zero();
                       for (int nu = 0; nu < c.N(); ++nu) {
                           int k = 0;
                           for (int x : g) k += x == nu;
                           if (k == 0) continue;
                           // (1 - q^-k) / (1 - q^-1)
                           Graded w = k == 1 ? c.one() : c.one() + c.qpow(-1);
                           Graded t(c.G(), c.G().mul(c.G().poch(b[1], c.md(-nu)), c.G().inv_poch_circle(b[2], c.md(-nu))));
                           corr += w * t * c.chi(-nu, b[5]);
                       }
                       return c.qpow(ge) * (c.hyp({b[1]}, {b[2]}, b[5]) + c.qpow(-1) * corr);
                   }});

    out.push_back({"NONREDUCED_EXAMPLES", "Example, \"q F(alpha,beta;lambda)+1\"",
                   {part({"i", "ii", "iii"}), ch("alpha"), ch("beta"), elem()},
                   {},
                   [](C, B b) { return b[3] != 0 && (b[0] != 1 || b[2] == 0); },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], l = b[3];
                       if (b[0] == 0) return c.hyp({a, 0}, {be, 0}, l);
                       if (b[0] == 1) return c.hyp({a}, {a}, l);
                       return c.FF({a, be}, {be}, l);
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], l = b[3];
                       int d1 = c.sub(1, l) == 0;
                       if (b[0] == 0) return c.qpow(1) * c.hyp({a}, {be}, l) + c.one();
                       if (b[0] == 1) return c.qpow(c.delta(a)) * (c.num(-d1) + c.qpow(-1) * c.chi(-a, l));
                       if (a != 0)
                           return c.qpow(c.delta(be)) * c.chi(-a, c.sub(1, l)) +
                                  c.frac({gp(a - be)}, {gp(a), gp(-be)}) * c.chi(-be, l);
                       return c.qpow(c.delta(be)) * c.num(1 - int64_t(c.q()) * d1) + c.chi(-be, l);
                   }});

    out.push_back({"ITERATION_JACOBI", "Thm, \"F(alpha,beta;lambda t) alpha(t) alpha-bar beta(1-t)\"",
                   {ch("a1"), ch("b1"), ch("alpha"), ch("beta"), elem()},
                   {},
                   [](C, B b) { return b[2] != b[3]; },
                   [](C c, B b) -> Value {
                       int al = b[2], be = b[3];
                       return c.hyp({b[0], al}, {b[1], be}, b[4]) * (-c.jac2(al, be - al));
                   },
                   [](C c, B b) -> Value {
                       int al = b[2], be = b[3];
                       Graded s = c.zero();
                       for (int t = 2; t < c.q(); ++t)
                           s += c.hyp({b[0]}, {b[1]}, c.mul(b[4], t)) * c.chi(al, t) * c.chi(be - al, c.sub(1, t));
                       return s;
                   }});

    out.push_back({"GEOMETRIC_1F0", "Cor, \"is a geometric series\"",
                   {ch("alpha"), elem()},
                   {},
                   [](C, B b) { return b[0] != 0 && b[1] != 0; },
                   [](C c, B b) -> Value { return c.FF({b[0]}, {}, b[1]); },
                   [](C c, B b) -> Value { return c.chi(-b[0], c.sub(1, b[1])); }});

    out.push_back({"SPECIAL_1F0", "Prop, \"F(alpha;1)\" and \"F(alpha;-1)\"",
                   {part({"1", "-1"}), ch("alpha")},
                   {},
                   {},
                   [](C c, B b) -> Value { return c.FF({b[1]}, {}, b[0] == 0 ? 1 : c.neg(1)); },
                   [](C c, B b) -> Value {
                       int a = b[1];
                       if (b[0] == 0) return a ? c.zero() : c.num(1 - c.q());
                       if (a) return c.chi(-a, c.el(2));
                       return c.num(c.p() == 2 ? 1 - c.q() : 1);
                   }});

    out.push_back({"BASIC_0F0", "Prop, \"F(0,0;lambda)=-delta(1-lambda)\"",
                   {part({"0F0", "0F1"}), elem()},
                   {},
                   [](C, B b) { return b[0] == 0 || b[1] != 0; },
                   [](C c, B b) -> Value { return c.hyp({}, b[0] ? std::vector<int>{0} : std::vector<int>{}, b[1]); },
                   [](C c, B b) -> Value {
                       if (b[0] == 0) return c.num(-int(c.sub(1, b[1]) == 0));
                       return c.psi(c.neg(b[1]));
                   }});
}

void add_sum_family(std::vector<IdentityDescriptor>& out) {
    // part: form (i)/(ii) and depth d.
    auto avail = [](const FieldCtx& F, int i) { return i % 2 == 0 || F.q <= 9; };
    out.push_back({"SUM_REPRESENTATION", "Cor, \"sum representations of hypergeometric functions\"",
                   {part({"i/1", "i/2", "ii/1", "ii/2"}, avail), ch("a0"), ch("a1"), ch("a2"), ch("b1"), ch("b2"),
                    elem()},
                   {},
                   [](C, B b) {
                       int d = b[0] % 2 + 1;
                       bool first = b[0] < 2;
                       if (b[2] == b[4]) return false;
                       if (d == 2 && b[3] == b[5]) return false;
                       if (d == 1 && (b[3] || b[5])) return false;
                       return first ? b[1] != 0 && b[6] != 0 : b[1] == 0;
                   },
                   [](C c, B b) -> Value {
                       int d = b[0] % 2 + 1;
                       std::vector<int> a = take(b, 2, d), be = take(b, 4, d);
                       CycloNum k = CycloNum::integer(c.N(), 1);
                       for (int i = 0; i < d; ++i) k *= -c.jac2(a[i], be[i] - a[i]);
                       if (b[0] < 2) return c.hyp(cat({b[1]}, a), cat({0}, be), b[6]) * k;
                       return c.hyp(a, be, b[6]) * k;
                   },
                   [](C c, B b) -> Value {
                       int d = b[0] % 2 + 1;
                       int l = b[6];
                       const int q = c.q();
                       std::vector<int64_t> cnt(c.N());
                       auto term = [&](int t, int i) { return ex(c, b[2 + i], t) + ex(c, b[4 + i] - b[2 + i], c.sub(1, t)); };
                       if (b[0] < 2) {
                           for (int t1 = 2; t1 < q; ++t1) {
                               if (d == 1) {
                                   int x = c.sub(1, c.mul(l, t1));
                                   if (x) ++cnt[(ex(c, -b[1], x) + term(t1, 0)) % c.N()];
                                   continue;
                               }
                               for (int t2 = 2; t2 < q; ++t2) {
                                   int x = c.sub(1, c.mul(l, c.mul(t1, t2)));
                                   if (x) ++cnt[(ex(c, -b[1], x) + term(t1, 0) + term(t2, 1)) % c.N()];
                               }
                           }
                       } else if (l != 0) {
                           if (d == 1) {
                               int t1 = c.inv(l);
                               if (t1 != 1) --cnt[term(t1, 0) % c.N()];
                           } else {
                               for (int t1 = 2; t1 < q; ++t1) {
                                   int t2 = c.inv(c.mul(l, t1));
                                   if (t2 != 1) --cnt[(term(t1, 0) + term(t2, 1)) % c.N()];
                               }
                           }
                       }
                       return group_ring(c, c.N(), cnt);
                   }});

    out.push_back({"ITERATION_GAUSS", "Thm, \"F(alpha,beta;lambda t) psi(t)alpha(t)\"",
                   {part({"numerator", "denominator"}), ch("a1"), ch("b1"), ch("chi"), elem()},
                   {},
                   {},
                   [](C c, B b) -> Value {
                       int x = b[3];
                       if (b[0] == 0) return -(c.gauss(x) * c.hyp({b[1], x}, {b[2]}, b[4]));
                       return -(c.qpow(1) * Graded(c.G(), c.G().inv_gauss_circle(x)) * c.hyp({b[1]}, {b[2], x}, b[4]));
                   },
                   [](C c, B b) -> Value {
                       int x = b[3], l = b[4];
                       Graded s = c.zero();
                       for (int t = 1; t < c.q(); ++t) {
                           if (b[0] == 0) s += c.hyp({b[1]}, {b[2]}, c.mul(l, t)) * c.psi(t) * c.chi(x, t);
                           else s += c.hyp({b[1]}, {b[2]}, c.div(l, t)) * c.psi(c.neg(t)) * c.chi(-x, t);
                       }
                       return s;
                   }});

    out.push_back({"KLOOSTERMAN_FORM", "Cor+Remark, \"generalized Kloosterman sums\"",
                   {part(kl_shapes()), ch("a1"), ch("a2"), ch("a3"), ch("b1"), ch("b2"), ch("b3"), elem()},
                   {},
                   [](C, B b) {
                       auto [m, n] = kl_shape(b[0]);
                       return canon(b, 1, m, 3) && canon(b, 4, n, 3);
                   },
                   [](C c, B b) -> Value {
                       auto [m, n] = kl_shape(b[0]);
                       Homog h{0, CycloNum::integer(c.N(), 1)};
                       for (int i = 0; i < m; ++i) h = c.G().mul(h, c.G().gauss(b[1 + i]));
                       for (int j = 0; j < n; ++j) h = c.G().mul(h, c.G().inv_gauss_circle(b[4 + j]));
                       Integer s = Integer::pow(Integer(c.q()), unsigned(n));
                       if ((m + n) % 2) s = -s;
                       h.c = h.c.scale(s);
                       return Graded(c.G(), h) * c.hyp(take(b, 1, m), take(b, 4, n), b[7]);
                   },
                   [](C c, B b) -> Value {
                       auto [m, n] = kl_shape(b[0]);
                       const int l = b[7], N = c.N(), p = c.p(), M = p * N;
                       std::vector<int64_t> cnt(M);
                       if (m + n == 0) {
                           if (l == 1) cnt[0] = -1;
                           return group_ring(c, M, cnt);
                       }
                       if (l == 0) return group_ring(c, M, cnt);
                       const int k = m + n;
                       // Variables x_0..x_{k-1}: s_1..s_m then t_1..t_n; the last one is solved for.
                       auto expo = [&](int i, int x) -> int64_t {
                           if (i < m) return int64_t(N) * c.F().trace(x) + int64_t(p) * ex(c, b[1 + i], x);
                           return int64_t(N) * c.F().trace(c.neg(x)) + int64_t(p) * ex(c, -b[4 + i - m], x);
                       };
                       std::vector<int> x(k, 1);
                       int64_t total = 1;
                       for (int i = 0; i + 1 < k; ++i) total *= N;
                       for (int64_t w = 0; w < total; ++w) {
                           int64_t r = w;
                           int prod_s = l, prod_t = 1;
                           for (int i = 0; i + 1 < k; ++i) {
                               x[i] = c.F().gpow(r % N);
                               r /= N;
                               if (i < m) prod_s = c.mul(prod_s, x[i]);
                               else prod_t = c.mul(prod_t, x[i]);
                           }
                           // lambda s_1..s_m = t_1..t_n
                           x[k - 1] = n >= 1 ? c.div(prod_s, prod_t) : c.div(prod_t, prod_s);
                           int64_t e = 0;
                           for (int i = 0; i < k; ++i) e += expo(i, x[i]);
                           --cnt[((e % M) + M) % M];
                       }
                       return group_ring(c, M, cnt);
                   }});
}

void add_multiplication_family(std::vector<IdentityDescriptor>& out) {
    out.push_back({"DH_MULT", "Thm, \"g(alpha^n)=alpha^n(n) prod\"",
                   {divisor_slot("n", 2), ch("alpha")},
                   {},
                   {},
                   [](C c, B b) -> Value {
                       int n = b[0] + 2;
                       return power_gauss(c.field_ptr()).gauss(c.md(int64_t(n) * b[1]));
                   },
                   [](C c, B b) -> Value {
                       int n = b[0] + 2, a = b[1];
                       const PowerGauss& P = power_gauss(c.field_ptr());
                       CycloNum r = char_eval(c.F(), c.md(int64_t(n) * a), c.el(n));
                       for (int f : c.roots_of_unity(n)) r *= P.gauss(c.md(a + f)) * P.inv_gauss(f);
                       return r;
                   }});

    out.push_back({"POCHHAMMER_MULT", "Cor, \"multiplication formulas for Pochhammer symbols\"",
                   {divisor_slot("n", 2), {"variant", SlotKind::Choice, {"plain", "circle"}, {}}, ch("alpha"), ch("nu")},
                   {},
                   {},
                   [](C c, B b) -> Value {
                       int n = b[0] + 2;
                       int64_t a = int64_t(n) * b[2], nu = int64_t(n) * b[3];
                       return b[1] ? c.poch_circle(a, nu) : c.poch(a, nu);
                   },
                   [](C c, B b) -> Value {
                       int n = b[0] + 2, a = b[2], nu = b[3];
                       Graded r = c.chi(int64_t(n) * nu, c.el(n));
                       for (int f : c.roots_of_unity(n)) r *= b[1] ? c.poch_circle(a + f, nu) : c.poch(a + f, nu);
                       return r;
                   }});

    out.push_back({"DUPLICATION", "Section intro, \"frequently the duplication formulas\"",
                   {part({"gauss", "plain", "circle"}), ch("alpha"), ch("nu")},
                   need_odd,
                   [](C, B b) { return b[0] != 0 || b[2] == 0; },
                   [](C c, B b) -> Value {
                       int a = b[1], nu = b[2];
                       if (b[0] == 0) return c.gauss(2 * a);
                       return b[0] == 1 ? c.poch(2 * a, 2 * nu) : c.poch_circle(2 * a, 2 * nu);
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], nu = b[2], f = c.phi();
                       if (b[0] == 0) return c.chi(a, c.el(4)) * c.frac({gp(a), gp(a + f)}, {gp(f)});
                       if (b[0] == 1) return c.chi(nu, c.el(4)) * c.poch(a, nu) * c.poch(a + f, nu);
                       return c.chi(nu, c.el(4)) * c.poch_circle(a, nu) * c.poch_circle(a + f, nu);
                   }});

    out.push_back({"DWORK_SUM", "Cor, \"j(nu-bar,nu-bar,...,nu-bar) nu(lambda)\"",
                   {divisor_slot("n", 1), {"form", SlotKind::Choice, {"plain", "reduced"}, {}}, elem()},
                   {},
                   [](C, B b) { return b[2] != 0; },
                   [](C c, B b) -> Value {
                       int n = b[0] + 1;
                       std::vector<int> a = c.roots_of_unity(n);
                       std::vector<int> be(n, 0);
                       int x = c.mul(c.F().pow(c.el(n), n), b[2]);
                       if (b[1]) {
                           a.erase(a.begin());
                           be.pop_back();
                       }
                       return c.num(1 - c.q()) * c.hyp(a, be, x);
                   },
                   [](C c, B b) -> Value {
                       int n = b[0] + 1;
                       const std::vector<CycloNum>& J = dwork_jacobi(c, n);
                       Graded s = c.zero();
                       for (int nu = 1; nu < c.N(); ++nu) s += c.chi(nu, b[2]) * J[nu];
                       if (!b[1]) s *= CycloNum::integer(c.N(), c.q());
                       return s + c.one();
                   }});
}

// Kummer's 24 solutions: index 0 is the base function, 1..23 the displayed
// equal expressions.
Graded kummer_expr(C c, int a, int b, int g, int l, int k) {
    Graded G1 = c.frac({gp(a - g), gp(b - g), gp(g)}, {gp(a), gp(b), gp(-g)});
    Graded G2 = c.frac({gc(g), gp(-a - b + g)}, {gp(-a + g), gp(-b + g)});
    Graded G3 = c.frac({gc(g), gp(a + b - g)}, {gp(a), gp(b)});
    Graded G4 = c.frac({gc(g), gp(-a + b)}, {gp(-a + g), gp(b)});
    Graded G5 = c.frac({gc(g), gp(a - b)}, {gp(-b + g), gp(a)});
    const int l1 = c.sub(1, l), ml = c.neg(l), il = c.inv(l);
    const int x12 = c.div(l, c.sub(l, 1)), x16 = c.div(c.sub(l, 1), l), x20 = c.inv(l1);
    Graded e = c.chi(-a - b + g, l1);  // (alpha beta)-bar gamma (1 - lambda)
    switch (k) {
    case 0: return c.FF({a, b}, {g}, l);
    case 1: return e * c.FF({-a + g, -b + g}, {g}, l);
    case 2: return G1 * c.chi(-g, l) * e * c.FF({-a, -b}, {-g}, l);
    case 3: return G1 * c.chi(-g, l) * c.FF({a - g, b - g}, {-g}, l);
    case 4: return G2 * c.FF({a, b}, {a + b - g}, l1);
    case 5: return G2 * c.chi(-g, l) * c.FF({a - g, b - g}, {a + b - g}, l1);
    case 6: return G3 * c.chi(-g, l) * e * c.FF({-a, -b}, {-a - b + g}, l1);
    case 7: return G3 * e * c.FF({-a + g, -b + g}, {-a - b + g}, l1);
    case 8: return G4 * c.chi(-a, ml) * c.FF({a, a - g}, {a - b}, il);
    case 9: return G4 * c.chi(b - g, ml) * e * c.FF({-b, -b + g}, {a - b}, il);
    case 10: return G5 * c.chi(-b, ml) * c.FF({b, b - g}, {-a + b}, il);
    case 11: return G5 * c.chi(a - g, ml) * e * c.FF({-a, -a + g}, {-a + b}, il);
    case 12: return c.chi(-a, l1) * c.FF({a, -b + g}, {g}, x12);
    case 13: return c.chi(-b, l1) * c.FF({-a + g, b}, {g}, x12);
    case 14: return G1 * c.chi(-g, l) * c.chi(-b + g, l1) * c.FF({-a, b - g}, {-g}, x12);
    case 15: return G1 * c.chi(-g, l) * c.chi(-a + g, l1) * c.FF({a - g, -b}, {-g}, x12);
    case 16: return G2 * c.chi(-a, l) * c.FF({a, a - g}, {a + b - g}, x16);
    case 17: return G2 * c.chi(-b, l) * c.FF({b, b - g}, {a + b - g}, x16);
    case 18: return G3 * c.chi(a - g, l) * e * c.FF({-a, -a + g}, {-a - b + g}, x16);
    case 19: return G3 * c.chi(b - g, l) * e * c.FF({-b, -b + g}, {-a - b + g}, x16);
    case 20: return G4 * c.chi(-a, l1) * c.FF({a, -b + g}, {a - b}, x20);
    case 21: return G4 * c.chi(-g, ml) * c.chi(-a + g, l1) * c.FF({a - g, -b}, {a - b}, x20);
    case 22: return G5 * c.chi(-b, l1) * c.FF({-a + g, b}, {-a + b}, x20);
    case 23: return G5 * c.chi(-g, ml) * c.chi(-b + g, l1) * c.FF({-a, b - g}, {-a + b}, x20);
    case 24: return c.qpow(c.delta(g)) * G1;
    case 25: return c.qpow(c.delta(a + b - g)) * G2 * G3;
    case 26: return c.qpow(c.delta(a - b)) * c.chi(g, c.neg(1)) * G4 * G5;
    }
    throw std::logic_error("kummer_expr index");
}

std::vector<std::string> kummer_parts() {
    std::vector<std::string> r;
    for (int k = 1; k <= 23; ++k) r.push_back("E" + std::to_string(k));
    r.push_back("G:1=23");
    r.push_back("G:1=45");
    return r;
}

void add_linear_family(std::vector<IdentityDescriptor>& out) {
    auto hyp0 = [](C c, int a, int b, int g) { return pair_idx(c, {a, b}, {0, g}) == 0; };

    out.push_back({"EULER_TRANSFORM", "Thm, \"respectively to Euler and Pfaff\"",
                   {ch("alpha"), ch("beta"), ch("gamma"), elem()},
                   {},
                   [=](C c, B b) { return hyp0(c, b[0], b[1], b[2]) && b[3] != 1; },
                   [](C c, B b) -> Value { return c.FF({b[0], b[1]}, {b[2]}, b[3]); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], l = b[3];
                       return c.chi(-a - be + g, c.sub(1, l)) * c.FF({-a + g, -be + g}, {g}, l);
                   }});

    out.push_back({"PFAFF_TRANSFORM", "Thm, \"respectively to Euler and Pfaff\"",
                   {ch("alpha"), ch("beta"), ch("gamma"), elem()},
                   {},
                   [=](C c, B b) { return hyp0(c, b[0], b[1], b[2]) && b[3] != 1; },
                   [](C c, B b) -> Value { return c.FF({b[0], b[1]}, {b[2]}, b[3]); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], l = b[3];
                       return c.chi(-a, c.sub(1, l)) * c.FF({a, -be + g}, {g}, c.div(l, c.sub(l, 1)));
                   }});

    out.push_back({"CONNECTION", "Thm, \"Kummer's 24 solutions\" context",
                   {ch("alpha"), ch("beta"), ch("gamma"), elem()},
                   {},
                   [=](C c, B b) { return hyp0(c, b[0], b[1], b[2]) && b[3] != 0 && b[3] != 1; },
                   [](C c, B b) -> Value { return c.FF({b[0], b[1]}, {b[2]}, b[3]); },
                   [](C c, B b) -> Value {
                       int a = b[0], be = b[1], g = b[2], l = b[3];
                       return c.frac({gc(g), gp(-a - be + g)}, {gp(-a + g), gp(-be + g)}) *
                              c.FF({a, be}, {a + be - g}, c.sub(1, l));
                   }});

    out.push_back({"KUMMER24", "Cor, \"These satisfy\"",
                   {part(kummer_parts()), ch("alpha"), ch("beta"), ch("gamma"), elem()},
                   {},
                   [=](C c, B b) {
                       if (!hyp0(c, b[1], b[2], b[3])) return false;
                       // The constant relations do not involve lambda; check them once.
                       if (b[0] >= 23) return b[4] == 2;
                       return b[4] != 0 && b[4] != 1;
                   },
                   [](C c, B b) -> Value {
                       return kummer_expr(c, b[1], b[2], b[3], b[4], b[0] < 23 ? 0 : 24);
                   },
                   [](C c, B b) -> Value {
                       int k = b[0] < 23 ? b[0] + 1 : b[0] + 2;
                       return kummer_expr(c, b[1], b[2], b[3], b[4], k);
                   }});
}

void add_core_family(std::vector<IdentityDescriptor>& out) {
    // Power-basis Gauss and Jacobi sums.
    out.push_back({"GAUSS_JACOBI_BASIC", "Prop, \"g(phi)g°(phi-bar)=phi(-1)q\"",
                   {part({"i", "ii", "iii", "iv/1", "iv/2", "iv/3"}), ch("c1"), ch("c2"), ch("c3")},
                   {},
                   [](C, B b) {
                       int used = b[0] == 0 ? 0 : b[0] <= 2 ? 1 : b[0] - 2;
                       for (int i = 1 + used; i <= 3; ++i)
                           if (b[i]) return false;
                       return true;
                   },
                   [](C c, B b) -> Value {
                       const PowerGauss& P = power_gauss(c.field_ptr());
                       int x = b[1];
                       switch (b[0]) {
                       case 0: return P.gauss(0) + P.gauss_circle(0);
                       case 1: return P.gauss(x).conj();
                       case 2: return P.gauss(x) * P.gauss_circle(c.md(-x));
                       default: return jacobi(c.field_ptr(), take(b, 1, b[0] - 2));
                       }
                   },
                   [](C c, B b) -> Value {
                       const PowerGauss& P = power_gauss(c.field_ptr());
                       int x = b[1];
                       switch (b[0]) {
                       case 0: return CycloNum::integer(c.N(), 1 + c.q());
                       case 1: return P.gauss(c.md(-x)) * char_eval(c.F(), x, c.neg(1));
                       case 2: return char_eval(c.F(), x, c.neg(1)) * CycloNum::integer(c.N(), c.q());
                       default: return jacobi_brute(c.F(), take(b, 1, b[0] - 2));
                       }
                   }});

    out.push_back({"POCHHAMMER_LEMMA", "Lemma, \"(alpha)_{beta nu}\"",
                   {part({"i", "i-circle", "ii", "iii"}), ch("alpha"), ch("beta"), ch("nu")},
                   {},
                   [](C, B b) { return b[0] < 2 || b[2] == 0 || b[0] == 3; },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], nu = b[3];
                       if (b[0] == 0) return c.poch(a, be + nu);
                       if (b[0] == 1) return c.poch_circle(a, be + nu);
                       if (b[0] == 2) return c.poch(a, nu) * c.poch_circle(-a, -nu);
                       // Power-basis quotient (alpha)_nu / (beta)°_nu, in Q(zeta_{q-1}).
                       const PowerGauss& P = power_gauss(c.field_ptr());
                       CycloNum r = P.pochhammer(a, nu, false) * P.gauss_circle(be) * P.inv_gauss_circle(c.md(be + nu));
                       if (!r.in_subfield(c.N())) throw std::logic_error("ratio outside Q(zeta_{q-1})");
                       return *r.compress(c.N());
                   },
                   [](C c, B b) -> Value {
                       int a = b[1], be = b[2], nu = b[3];
                       if (b[0] == 0) return c.poch(a, be) * c.poch(a + be, nu);
                       if (b[0] == 1) return c.poch_circle(a, be) * c.poch_circle(a + be, nu);
                       if (b[0] == 2) return c.chi(nu, c.neg(1));
                       return c.poch_ratio(a, be, nu);
                   }});

    // Transform pairs and the three Fourier formulas on f = alpha(x) beta(1-x), psi.
    out.push_back({"FOURIER_TOOLKIT", "Example, \"Fourier transform\" pairs, inversion, convolution, Plancherel",
                   {part({"delta", "psi", "jacobi", "inversion", "convolution", "plancherel"}), ch("alpha"), ch("beta"),
                    ch("nu"), elem("a")},
                   {},
                   [](C, B b) {
                       switch (b[0]) {
                       case 0: return unused(b, {1, 2}) && b[4] != 0;
                       case 1: return unused(b, {1, 2, 4});
                       case 2: return b[4] == 0;
                       case 3: return b[3] == 0 && b[4] != 0;
                       case 4: return b[4] == 0;
                       default: return b[3] == 0 && b[4] == 0;
                       }
                   },
                   [](C c, B b) -> Value {
                       const int a = b[1], be = b[2], nu = b[3], x = b[4];
                       auto f = [&](int t) { return c.chi(a, t) * c.chi(be, c.sub(1, t)); };
                       Graded s = c.zero();
                       switch (b[0]) {
                       case 0:
                           for (int t = 1; t < c.q(); ++t)
                               if (t == x) s += c.chi(-nu, t);
                           return s;
                       case 1:
                           for (int t = 1; t < c.q(); ++t) s += c.psi(t) * c.chi(-nu, t);
                           return s;
                       case 2:
                           for (int t = 1; t < c.q(); ++t) s += f(t) * c.chi(-nu, t);
                           return s;
                       case 3: return f(x);
                       case 4:
                           for (int t = 1; t < c.q(); ++t) s += f(t) * c.psi(t) * c.chi(-nu, t);
                           return s;
                       default:
                           for (int t = 1; t < c.q(); ++t) s += f(t) * c.psi(t).conj();
                           return s;
                       }
                   },
                   [](C c, B b) -> Value {
                       const int a = b[1], be = b[2], nu = b[3], x = b[4];
                       auto fhat = [&](int n) { return Graded(c.G(), -c.jac2(a - n, be)); };
                       auto psihat = [&](int n) { return -c.gauss(-n); };
                       Graded s = c.zero();
                       switch (b[0]) {
                       case 0: return c.chi(-nu, x);
                       case 1: return psihat(nu);
                       case 2: return fhat(nu);
                       case 3:
                           for (int n = 0; n < c.N(); ++n) s += fhat(n) * c.chi(n, x);
                           return s.scale(1, c.N());
                       case 4:
                           for (int n = 0; n < c.N(); ++n) s += fhat(n) * psihat(nu - n);
                           return s.scale(1, c.N());
                       default:
                           for (int n = 0; n < c.N(); ++n) s += fhat(n) * psihat(n).conj();
                           return s.scale(1, c.N());
                       }
                   }});
}

}  // namespace

void register_basic_identities(std::vector<IdentityDescriptor>& out) {
    add_core_family(out);
    add_shift_family(out);
    add_reduction_family(out);
    add_sum_family(out);
    add_multiplication_family(out);
    add_linear_family(out);
}

}  // namespace hgff
