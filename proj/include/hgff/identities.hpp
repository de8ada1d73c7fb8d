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

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "hgff/graded.hpp"
#include "hgff/hyper.hpp"

namespace hgff {

enum class SlotKind { Char, Elem, Choice };

struct Slot {
    std::string name;
    SlotKind kind = SlotKind::Char;
    std::vector<std::string> choices;
    // Choice slots only: whether choice i can be enumerated over F.
    std::function<bool(const FieldCtx&, int)> available;
};

// Slot values in declaration order: character index, element code, or choice index.
using Binding = std::vector<int>;

// Either a graded element or a power-basis number.
struct Value {
    Graded g;
    CycloNum c;
    bool power = false;

    Value() = default;
    Value(Graded v) : g(std::move(v)) {}
    Value(CycloNum v) : c(std::move(v)), power(true) {}
};

class IdCtx;

struct IdentityDescriptor {
    std::string id;
    std::string anchor;
    std::vector<Slot> slots;
    // Returns a reason when the identity has no cases over F, else "".
    std::function<std::string(const FieldCtx&)> requires_field;
    std::function<bool(const IdCtx&, const Binding&)> hypothesis;
    std::function<Value(const IdCtx&, const Binding&)> lhs;
    std::function<Value(const IdCtx&, const Binding&)> rhs;
};

// Gauss sum factor in a quotient: g(omega^j), or g°(omega^j) when circ.
struct GT {
    int j;
    bool circ;
};
inline GT gp(int j) { return {j, false}; }
inline GT gc(int j) { return {j, true}; }

// Per-field evaluation context shared by all evaluators. Immutable once built.
class IdCtx {
public:
    explicit IdCtx(FieldPtr F);

    const FieldPtr& field_ptr() const { return F_; }
    const FieldCtx& F() const { return *F_; }
    const GaussAlgebra& G() const { return *G_; }
    int N() const { return N_; }
    int q() const { return F_->q; }
    int p() const { return F_->p; }
    // Quadratic character index, -1 in characteristic 2.
    int phi() const { return phi_; }

    int md(int64_t j) const { return char_mod(*F_, j); }
    bool delta(int64_t j) const { return md(j) == 0; }

    // F(A, B; lambda) for index lists.
    Graded hyp(const std::vector<int>& a, const std::vector<int>& b, int lambda) const;
    // F(a_1 + ... + a_r, e + b_1 + ... + b_s; lambda).
    Graded FF(const std::vector<int>& a, const std::vector<int>& b, int lambda) const;

    Graded chi(int64_t j, int x) const { return G_->chi(md(j), x); }
    Graded psi(int x) const { return G_->psi(x); }
    Graded one() const { return G_->one(); }
    Graded zero() const { return Graded(*G_); }
    Graded num(const Integer& n, const Integer& d = 1) const { return G_->scalar(n, d); }
    // q^k for any integer k.
    Graded qpow(int k) const;
    Homog hfrac(std::initializer_list<GT> num, std::initializer_list<GT> den) const;
    Graded frac(std::initializer_list<GT> num, std::initializer_list<GT> den) const {
        return Graded(*G_, hfrac(num, den));
    }
    Graded gauss(int64_t j) const { return Graded(*G_, G_->gauss(md(j))); }
    Graded gauss_circle(int64_t j) const { return Graded(*G_, G_->gauss_circle(md(j))); }
    // (a)_n and (a)_n / (b)°_n.
    Graded poch(int64_t a, int64_t n) const { return Graded(*G_, G_->poch(md(a), md(n))); }
    Graded poch_circle(int64_t a, int64_t n) const { return Graded(*G_, G_->poch_circle(md(a), md(n))); }
    Graded poch_ratio(int64_t a, int64_t b, int64_t n) const;
    // Two-variable Jacobi sum by direct count, as a power-basis number over q-1.
    const CycloNum& jac2(int64_t a, int64_t b) const { return jac2_[size_t(md(a)) * N_ + md(b)]; }

    // Field element helpers.
    int add(int a, int b) const { return F_->add(a, b); }
    int sub(int a, int b) const { return F_->sub(a, b); }
    int mul(int a, int b) const { return F_->mul(a, b); }
    int div(int a, int b) const { return F_->div(a, b); }
    int neg(int a) const { return F_->neg(a); }
    int inv(int a) const { return F_->inv(a); }
    int el(int64_t n) const { return F_->from_int(n); }

    // Characters of exact order n, in increasing index.
    std::vector<int> chars_of_order(int n) const;
    // All chi with chi^n = e.
    std::vector<int> roots_of_unity(int n) const;

private:
    FieldPtr F_;
    const GaussAlgebra* G_;
    int N_;
    int phi_;
    std::vector<CycloNum> jac2_;
};

const IdCtx& id_ctx(const FieldPtr& F);

// Exact equality, aligning graded and power-basis forms.
bool values_equal(const IdCtx& C, const Value& a, const Value& b);
// Power-basis coordinates over the smallest conductor.
CycloNum value_power(const IdCtx& C, const Value& v);

const std::vector<IdentityDescriptor>& identity_registry();
// Sorted ids.
std::vector<std::string> list_identities();
const IdentityDescriptor& find_identity(const std::string& id);

struct VerifyMode {
    bool exhaustive = true;
    uint64_t n = 200;
    uint64_t seed = 1;
};

struct CaseFailure {
    uint64_t key = 0;
    Binding binding;
    CycloNum lhs, rhs;
};

struct VerifyReport {
    std::string identity;
    FieldPtr field;
    VerifyMode mode;
    bool skipped = false;
    std::string skip_reason;
    uint64_t cases_checked = 0;
    std::vector<CaseFailure> failures;
    double elapsed_ms = 0;
    bool passed() const { return failures.empty(); }
};

// Mixed-radix domain of an identity over F. Throws UnsatisfiableInField.
struct CaseSpace {
    std::vector<int> radix;
    std::vector<std::vector<int>> values;  // per slot, the admissible raw values
    uint64_t size() const;
    Binding decode(uint64_t key) const;
};
CaseSpace case_space(const IdentityDescriptor& d, const FieldCtx& F);

// Keys of the cases satisfying the hypothesis (all of them, or a seeded
// sample drawn without replacement), in increasing order.
std::vector<uint64_t> enumerate_cases(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode);

// jobs <= 0 uses the OpenMP default.
VerifyReport verify(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode, int jobs = 0);
// Straight loop with no threading; reports must match verify().
VerifyReport verify_serial(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode);
std::vector<VerifyReport> verify_all(const std::vector<FieldPtr>& fields, const VerifyMode& mode, int jobs = 0);

// For the rhs binding, one character slot is replaced by a different value.
struct Mutation {
    Binding binding;
    int slot = -1;
    int value = 0;
};
// Evaluate lhs at b and rhs at the mutation; true when the engine catches it
// (values differ or the mutated binding fails the hypothesis).
bool mutation_detected(const IdentityDescriptor& d, const IdCtx& C, const Mutation& m);
// Draws a passing case of d and a mutation of one character slot.
Mutation random_mutation(const IdentityDescriptor& d, const FieldPtr& F, uint64_t seed);
// verify() with every rhs evaluated at a mutated binding; used to exercise the
// failure path end to end.
VerifyReport verify_mutated(const IdentityDescriptor& d, const FieldPtr& F, const VerifyMode& mode, uint64_t seed);

std::string binding_str(const IdentityDescriptor& d, const FieldCtx& F, const Binding& b);

// Registration entry points, one per source file.
void register_basic_identities(std::vector<IdentityDescriptor>& out);
void register_summation_identities(std::vector<IdentityDescriptor>& out);
void register_quadratic_identities(std::vector<IdentityDescriptor>& out);
void register_product_identities(std::vector<IdentityDescriptor>& out);

}  // namespace hgff
