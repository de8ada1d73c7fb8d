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

#include "hgff/characters.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "hgff/errors.hpp"

namespace hgff {

int char_of_order(const FieldCtx& F, int n) {
    if (n <= 0 || (F.q - 1) % n != 0)
        throw UnsatisfiableInField("no character of order " + std::to_string(n) + " for q=" + std::to_string(F.q));
    return (F.q - 1) / n;
}

int char_quadratic(const FieldCtx& F) { return char_of_order(F, 2); }

int char_order(const FieldCtx& F, int j) {
    int n = F.q - 1;
    return n / std::gcd(n, char_mod(F, j));
}

int char_sign_exp(const FieldCtx& F, int j) { return char_exp(F, char_mod(F, j), F.neg(1)); }

CycloNum char_eval(const FieldCtx& F, int j, int x) {
    int e = char_exp(F, char_mod(F, j), x);
    if (e < 0) return CycloNum(F.q - 1);
    return CycloNum::root(F.q - 1, e);
}

int parse_char(const FieldCtx& F, const std::string& name) {
    if (name == "e" || name == "eps") return 0;
    if (name == "phi") return char_of_order(F, 2);
    if (name == "sigma") return char_of_order(F, 4);
    if (name == "sigma3") return char_mod(F, 3 * char_of_order(F, 4));
    if (name == "rho") return char_of_order(F, 3);
    if (name == "rho2") return char_mod(F, 2 * char_of_order(F, 3));
    if (name.rfind("w^", 0) == 0 && name.size() > 2) {
        size_t pos = 0;
        long long j = std::stoll(name.substr(2), &pos);
        if (pos != name.size() - 2) throw UsageError("bad character name: " + name);
        return char_mod(F, j);
    }
    throw UsageError("unknown character name: " + name);
}

std::string char_name(const FieldCtx& F, int j) {
    j = char_mod(F, j);
    if (j == 0) return "e";
    if (F.q % 2 == 1 && j == (F.q - 1) / 2) return "phi";
    return "w^" + std::to_string(j);
}

int psi_conductor(const FieldCtx& F) { return F.p * (F.q - 1); }

CycloNum psi_eval(const FieldCtx& F, int x) {
    return CycloNum::root(psi_conductor(F), int64_t(F.q - 1) * F.trace(x));
}

CycloNum gauss_direct(const FieldCtx& F, int j) {
    const int N = F.q - 1, m = F.p * N;
    j = char_mod(F, j);
    std::vector<Integer> c(m);
    std::vector<int64_t> cnt(m, 0);
    for (int x = 1; x < F.q; ++x) {
        int64_t ex = (int64_t(N) * F.trace(x) + int64_t(F.p) * ((int64_t(j) * F.dlog_or_neg(x)) % N)) % m;
        cnt[ex] -= 1;
    }
    for (int i = 0; i < m; ++i) c[i] = cnt[i];
    return CycloNum::from_group_ring(m, std::move(c));
}

PowerGauss::PowerGauss(FieldPtr F) : F_(std::move(F)), m_(F_->p * (F_->q - 1)) {
    table_.reserve(F_->q - 1);
    for (int j = 0; j < F_->q - 1; ++j) table_.push_back(gauss_direct(*F_, j));
}

CycloNum PowerGauss::gauss_circle(int j) const {
    j = char_mod(*F_, j);
    if (j == 0) return table_[0].scale(F_->q);
    return table_[j];
}

CycloNum PowerGauss::inv_gauss(int j) const {
    j = char_mod(*F_, j);
    // chi(-1) g°(chi^-1) / q
    CycloNum r = gauss_circle(-j).scale(1, F_->q);
    return r.mul_root(int64_t(char_sign_exp(*F_, j)) * F_->p);
}

CycloNum PowerGauss::inv_gauss_circle(int j) const {
    j = char_mod(*F_, j);
    if (j == 0) return inv_gauss(0).scale(1, F_->q);
    return inv_gauss(j);
}

CycloNum PowerGauss::pochhammer(int a, int n, bool circle) const {
    if (circle) return gauss_circle(a + n) * inv_gauss_circle(a);
    return gauss(a + n) * inv_gauss(a);
}

CycloNum PowerGauss::pochhammer_by_division(int a, int n, bool circle) const {
    if (circle) return gauss_circle(a + n) / gauss_circle(a);
    return gauss(a + n) / gauss(a);
}

const PowerGauss& power_gauss(const FieldPtr& F) {
    static std::mutex mu;
    static std::map<const FieldCtx*, std::pair<FieldPtr, std::unique_ptr<PowerGauss>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(F.get());
    if (it == cache.end())
        it = cache.emplace(F.get(), std::make_pair(F, std::make_unique<PowerGauss>(F))).first;
    return *it->second.second;
}

namespace {

void jacobi_rec(const FieldCtx& F, const std::vector<int>& js, size_t i, int sum, int64_t ex,
                std::vector<int64_t>& cnt) {
    const int N = F.q - 1;
    if (i + 1 == js.size()) {
        int x = F.sub(1, sum);
        if (x == 0) return;
        cnt[(ex + int64_t(js[i]) * F.dlog_or_neg(x)) % N] += 1;
        return;
    }
    for (int x = 1; x < F.q; ++x)
        jacobi_rec(F, js, i + 1, F.add(sum, x), (ex + int64_t(js[i]) * F.dlog_or_neg(x)) % N, cnt);
}

}  // namespace

CycloNum jacobi_brute(const FieldCtx& F, const std::vector<int>& js) {
    if (js.empty()) throw std::invalid_argument("jacobi needs at least one character");
    const int N = F.q - 1;
    std::vector<int> jj;
    for (int j : js) jj.push_back(char_mod(F, j));
    std::vector<int64_t> cnt(N, 0);
    jacobi_rec(F, jj, 0, 0, 0, cnt);
    std::vector<Integer> c(N);
    const int64_t sg = (js.size() % 2 == 1) ? 1 : -1;
    for (int i = 0; i < N; ++i) c[i] = cnt[i] * sg;
    return CycloNum::from_group_ring(N, std::move(c));
}

CycloNum jacobi2_brute(const FieldCtx& F, int a, int b) {
    const int N = F.q - 1;
    a = char_mod(F, a);
    b = char_mod(F, b);
    std::vector<int64_t> cnt(N, 0);
    // x ranges over k minus {0, 1}
    for (int x = 2; x < F.q; ++x) {
        int y = F.sub(1, x);
        cnt[(int64_t(a) * F.dlog_or_neg(x) + int64_t(b) * F.dlog_or_neg(y)) % N] -= 1;
    }
    std::vector<Integer> c(N);
    for (int i = 0; i < N; ++i) c[i] = cnt[i];
    return CycloNum::from_group_ring(N, std::move(c));
}

CycloNum jacobi(const FieldPtr& F, const std::vector<int>& js) {
    if (js.empty()) throw std::invalid_argument("jacobi needs at least one character");
    const int N = F->q - 1;
    bool all_trivial = true;
    int64_t tot = 0;
    for (int j : js) {
        if (char_mod(*F, j) != 0) all_trivial = false;
        tot += j;
    }
    if (all_trivial) {
        // (1 - (1-q)^n) / q
        Integer t = Integer::pow(Integer(1 - F->q), unsigned(js.size()));
        return CycloNum::rational(N, Integer(1) - t, F->q);
    }
    const PowerGauss& G = power_gauss(F);
    CycloNum v = G.inv_gauss_circle(char_mod(*F, tot));
    for (int j : js) v *= G.gauss(j);
    auto c = v.compress(N);
    if (!c) throw std::logic_error("Jacobi quotient left Q(zeta_{q-1})");
    return *c;
}

}  // namespace hgff
