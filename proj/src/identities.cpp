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

#include "hgff/identities.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>

#include "hgff/errors.hpp"

namespace hgff {

IdCtx::IdCtx(FieldPtr F) : F_(std::move(F)), G_(&gauss_algebra(F_)), N_(F_->q - 1) {
    phi_ = F_->p == 2 ? -1 : char_quadratic(*F_);
    jac2_.resize(size_t(N_) * N_);
    for (int a = 0; a < N_; ++a)
        for (int b = 0; b < N_; ++b) jac2_[size_t(a) * N_ + b] = jacobi2_brute(*F_, a, b);
}

Graded IdCtx::hyp(const std::vector<int>& a, const std::vector<int>& b, int lambda) const {
    return hyp_graded(*G_, ParamMultiset(N_, a), ParamMultiset(N_, b), lambda);
}

Graded IdCtx::FF(const std::vector<int>& a, const std::vector<int>& b, int lambda) const {
    std::vector<int> bb(b);
    bb.push_back(0);
    return hyp(a, bb, lambda);
}

Graded IdCtx::qpow(int k) const {
    Integer t = Integer::pow(Integer(q()), unsigned(k < 0 ? -k : k));
    return k < 0 ? num(1, t) : num(t);
}

Homog IdCtx::hfrac(std::initializer_list<GT> num, std::initializer_list<GT> den) const {
    Homog h{0, CycloNum::integer(N_, 1)};
    for (const GT& t : num) h = G_->mul(h, t.circ ? G_->gauss_circle(md(t.j)) : G_->gauss(md(t.j)));
    for (const GT& t : den) h = G_->mul(h, t.circ ? G_->inv_gauss_circle(md(t.j)) : G_->inv_gauss(md(t.j)));
    return h;
}

Graded IdCtx::poch_ratio(int64_t a, int64_t b, int64_t n) const {
    if (G_->has_ratio_table()) return Graded(*G_, G_->ratio(md(a), md(b), md(n)));
    return Graded(*G_, G_->mul(G_->poch(md(a), md(n)), G_->inv_poch_circle(md(b), md(n))));
}

std::vector<int> IdCtx::chars_of_order(int n) const {
    std::vector<int> r;
    for (int j = 0; j < N_; ++j)
        if (char_order(*F_, j) == n) r.push_back(j);
    return r;
}

std::vector<int> IdCtx::roots_of_unity(int n) const {
    std::vector<int> r;
    for (int j = 0; j < N_; ++j)
        if ((int64_t(j) * n) % N_ == 0) r.push_back(j);
    return r;
}

const IdCtx& id_ctx(const FieldPtr& F) {
    static std::mutex mu;
    static std::map<const FieldCtx*, std::pair<FieldPtr, std::unique_ptr<IdCtx>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(F.get());
    if (it == cache.end()) it = cache.emplace(F.get(), std::make_pair(F, std::make_unique<IdCtx>(F))).first;
    return *it->second.second;
}

CycloNum value_power(const IdCtx& C, const Value& v) {
    return (v.power ? v.c : C.G().to_power(v.g)).compress_min();
}

bool values_equal(const IdCtx& C, const Value& a, const Value& b) {
    if (!a.power && !b.power) return a.g == b.g;
    CycloNum x = a.power ? a.c : C.G().to_power(a.g);
    CycloNum y = b.power ? b.c : C.G().to_power(b.g);
    return x == y;
}

const std::vector<IdentityDescriptor>& identity_registry() {
    static const std::vector<IdentityDescriptor> reg = [] {
        std::vector<IdentityDescriptor> out;
        register_basic_identities(out);
        register_summation_identities(out);
        register_quadratic_identities(out);
        register_product_identities(out);
        return out;
    }();
    return reg;
}

std::vector<std::string> list_identities() {
    std::vector<std::string> ids;
    for (auto& d : identity_registry()) ids.push_back(d.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

const IdentityDescriptor& find_identity(const std::string& id) {
    for (auto& d : identity_registry())
        if (d.id == id) return d;
    throw UnknownIdentity("unknown identity " + id);
}

uint64_t CaseSpace::size() const {
    uint64_t n = 1;
    for (int r : radix) n *= uint64_t(r);
    return n;
}

Binding CaseSpace::decode(uint64_t key) const {
    Binding b(radix.size());
    for (size_t i = radix.size(); i-- > 0;) {
        b[i] = values[i][key % radix[i]];
        key /= radix[i];
    }
    return b;
}

CaseSpace case_space(const IdentityDescriptor& d, const FieldCtx& F) {
    if (d.requires_field) {
        std::string why = d.requires_field(F);
        if (!why.empty()) throw UnsatisfiableInField(why);
    }
    CaseSpace cs;
    for (const Slot& s : d.slots) {
        std::vector<int> v;
        int n = s.kind == SlotKind::Char ? F.q - 1 : s.kind == SlotKind::Elem ? F.q : int(s.choices.size());
        for (int i = 0; i < n; ++i)
            if (s.kind != SlotKind::Choice || !s.available || s.available(F, i)) v.push_back(i);
        if (v.empty()) throw UnsatisfiableInField("no admissible value for " + s.name);
        cs.radix.push_back(int(v.size()));
        cs.values.push_back(std::move(v));
    }
    return cs;
}

std::vector<uint64_t> enumerate_cases(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode) {
    CaseSpace cs = case_space(d, *F);
    const IdCtx& C = id_ctx(F);
    std::vector<uint64_t> keys;
    const uint64_t n = cs.size();
    for (uint64_t k = 0; k < n; ++k)
        if (!d.hypothesis || d.hypothesis(C, cs.decode(k))) keys.push_back(k);
    if (mode.exhaustive || keys.size() <= mode.n) return keys;
    std::mt19937_64 rng(mode.seed);
    for (uint64_t i = 0; i < mode.n; ++i) {
        std::uniform_int_distribution<uint64_t> pick(i, keys.size() - 1);
        std::swap(keys[i], keys[pick(rng)]);
    }
    keys.resize(mode.n);
    std::sort(keys.begin(), keys.end());
    return keys;
}

namespace {

using Clock = std::chrono::steady_clock;

VerifyReport skipped_report(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode,
                            const std::string& why) {
    VerifyReport r;
    r.identity = d.id;
    r.field = F;
    r.mode = mode;
    r.skipped = true;
    r.skip_reason = why;
    return r;
}

bool check_case(const IdentityDescriptor& d, const IdCtx& C, const CaseSpace& cs, uint64_t key,
                CaseFailure& fail) {
    Binding b = cs.decode(key);
    Value l = d.lhs(C, b), r = d.rhs(C, b);
    if (values_equal(C, l, r)) return true;
    fail.key = key;
    fail.binding = std::move(b);
    fail.lhs = value_power(C, l);
    fail.rhs = value_power(C, r);
    return false;
}

}  // namespace

VerifyReport verify(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode, int jobs) {
    auto t0 = Clock::now();
    CaseSpace cs;
    std::vector<uint64_t> keys;
    try {
        cs = case_space(d, *F);
        keys = enumerate_cases(d, F, mode);
    } catch (const UnsatisfiableInField& e) {
        return skipped_report(d, F, mode, e.what());
    }
    const IdCtx& C = id_ctx(F);
    VerifyReport rep;
    rep.identity = d.id;
    rep.field = F;
    rep.mode = mode;
    rep.cases_checked = keys.size();
    std::exception_ptr err;
    const int64_t n = int64_t(keys.size());
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        std::vector<CaseFailure> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (int64_t i = 0; i < n; ++i) {
            if (err) continue;
            try {
                CaseFailure f;
                if (!check_case(d, C, cs, keys[i], f)) local.push_back(std::move(f));
            } catch (...) {
#pragma omp critical(hgff_verify_err)
                if (!err) err = std::current_exception();
            }
        }
#pragma omp critical(hgff_verify_merge)
        for (auto& f : local) rep.failures.push_back(std::move(f));
    }
    if (err) std::rethrow_exception(err);
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const CaseFailure& a, const CaseFailure& b) { return a.key < b.key; });
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

VerifyReport verify_serial(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode) {
    auto t0 = Clock::now();
    CaseSpace cs;
    std::vector<uint64_t> keys;
    try {
        cs = case_space(d, *F);
        keys = enumerate_cases(d, F, mode);
    } catch (const UnsatisfiableInField& e) {
        return skipped_report(d, F, mode, e.what());
    }
    const IdCtx& C = id_ctx(F);
    VerifyReport rep;
    rep.identity = d.id;
    rep.field = F;
    rep.mode = mode;
    rep.cases_checked = keys.size();
    for (uint64_t k : keys) {
        CaseFailure f;
        if (!check_case(d, C, cs, k, f)) rep.failures.push_back(std::move(f));
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

std::vector<VerifyReport> verify_all(const std::vector<FieldPtr>& fields, const VerifyMode& mode, int jobs) {
    std::vector<VerifyReport> out;
    for (const FieldPtr& F : fields)
        for (const std::string& id : list_identities()) out.push_back(verify(find_identity(id), F, mode, jobs));
    return out;
}

namespace {

std::vector<int> char_slots(const IdentityDescriptor& d) {
    std::vector<int> r;
    for (size_t i = 0; i < d.slots.size(); ++i)
        if (d.slots[i].kind == SlotKind::Char) r.push_back(int(i));
    return r;
}

}  // namespace

bool mutation_detected(const IdentityDescriptor& d, const IdCtx& C, const Mutation& m) {
    Binding mb = m.binding;
    mb[m.slot] = m.value;
    if (d.hypothesis && !d.hypothesis(C, mb)) return true;
    return !values_equal(C, d.lhs(C, m.binding), d.rhs(C, mb));
}

Mutation random_mutation(const IdentityDescriptor& d, const FieldPtr& F, uint64_t seed) {
    std::vector<int> slots = char_slots(d);
    if (slots.empty() || F->q < 3) return {};
    VerifyMode one{false, 1, seed};
    std::vector<uint64_t> keys = enumerate_cases(d, F, one);
    if (keys.empty()) return {};
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    Mutation m;
    m.binding = case_space(d, *F).decode(keys[0]);
    m.slot = slots[std::uniform_int_distribution<size_t>(0, slots.size() - 1)(rng)];
    int shift = std::uniform_int_distribution<int>(1, F->q - 2)(rng);
    m.value = (m.binding[m.slot] + shift) % (F->q - 1);
    return m;
}

VerifyReport verify_mutated(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode, uint64_t seed) {
    auto t0 = Clock::now();
    CaseSpace cs;
    std::vector<uint64_t> keys;
    try {
        cs = case_space(d, *F);
        keys = enumerate_cases(d, F, mode);
    } catch (const UnsatisfiableInField& e) {
        return skipped_report(d, F, mode, e.what());
    }
    const IdCtx& C = id_ctx(F);
    VerifyReport rep;
    rep.identity = d.id;
    rep.field = F;
    rep.mode = mode;
    std::vector<int> slots = char_slots(d);
    if (slots.empty() || F->q < 3) return rep;
    for (uint64_t k : keys) {
        std::mt19937_64 rng(seed + k);
        Binding b = cs.decode(k);
        // Retry until the mutated binding is still admissible.
        for (int tries = 0; tries < 32; ++tries) {
            Binding mb = b;
            int s = slots[std::uniform_int_distribution<size_t>(0, slots.size() - 1)(rng)];
            mb[s] = (mb[s] + std::uniform_int_distribution<int>(1, F->q - 2)(rng)) % (F->q - 1);
            if (d.hypothesis && !d.hypothesis(C, mb)) continue;
            ++rep.cases_checked;
            Value l = d.lhs(C, b), r = d.rhs(C, mb);
            if (!values_equal(C, l, r)) rep.failures.push_back({k, b, value_power(C, l), value_power(C, r)});
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

std::string binding_str(const IdentityDescriptor& d, const FieldCtx& F, const Binding& b) {
    std::string s;
    for (size_t i = 0; i < d.slots.size(); ++i) {
        const Slot& sl = d.slots[i];
        if (i) s += ", ";
        s += sl.name + "=";
        if (sl.kind == SlotKind::Char) s += char_name(F, b[i]);
        else if (sl.kind == SlotKind::Elem) s += std::to_string(b[i]);
        else s += sl.choices[b[i]];
    }
    return s;
}

}  // namespace hgff
