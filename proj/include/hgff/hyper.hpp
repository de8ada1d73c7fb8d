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

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "hgff/graded.hpp"

namespace hgff {

// Element of the free abelian monoid on characters of k*: a sorted list of
// indices j mod q-1, with repetition.
class ParamMultiset {
public:
    ParamMultiset() = default;
    ParamMultiset(int n, std::initializer_list<int> js);
    ParamMultiset(int n, const std::vector<int>& js);

    int modulus() const { return n_; }
    int deg() const { return int(v_.size()); }
    const std::vector<int>& idx() const { return v_; }
    int operator[](int i) const { return v_[i]; }
    int count(int j) const;

    // chi * A and the conjugate multiset.
    ParamMultiset shift(int chi) const;
    ParamMultiset conj() const;
    ParamMultiset operator+(const ParamMultiset& o) const;
    // Multiset difference; throws when o is not contained in *this.
    ParamMultiset operator-(const ParamMultiset& o) const;
    bool contains(const ParamMultiset& o) const;

    friend bool operator==(const ParamMultiset& a, const ParamMultiset& b) { return a.v_ == b.v_; }
    friend bool operator<(const ParamMultiset& a, const ParamMultiset& b) { return a.v_ < b.v_; }

    std::string str() const;

private:
    int n_ = 1;
    std::vector<int> v_;
};

// Bilinear pairing counting equal characters with multiplicity.
int pairing(const ParamMultiset& a, const ParamMultiset& b);
// (A, chi) for a single character.
int pairing(const ParamMultiset& a, int chi);

struct Reduction {
    ParamMultiset a, b, gamma;
};
Reduction reduce_params(const ParamMultiset& a, const ParamMultiset& b);

ParamMultiset parse_params(const FieldCtx& F, const std::string& csv);

// The summands (A)_nu / (B)°_nu for every nu, stored over a common
// denominator so one lambda costs a shifted accumulation.
class HypTerms {
public:
    HypTerms(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b);
    const GaussAlgebra& algebra() const { return *G_; }
    const Homog& term(int nu) const { return terms_[nu]; }
    Graded eval(int lambda) const;

private:
    const GaussAlgebra* G_;
    std::vector<Homog> terms_;
    std::vector<std::vector<Integer>> num_;  // per nu, power-basis numerators over den_
    Integer den_{1};
};

// Cached per thread and keyed by the parameters.
std::shared_ptr<const HypTerms> hyp_terms(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b);

// F(A, B; lambda) = 1/(1-q) sum_nu (A)_nu / (B)°_nu nu(lambda).
Graded hyp_graded(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int lambda);
// Same, summed term by term with no caching and no common denominator.
Graded hyp_graded_reference(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int lambda);
// F of the reduced pair.
Graded hyp_reduced(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int lambda);

// F(A, B; lambda) for every lambda in k, indexed by element code. OpenMP over
// lambda; jobs <= 0 uses the default team.
std::vector<Graded> hyp_table(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b, int jobs = 0);
// Serial reference for hyp_table.
std::vector<Graded> hyp_table_serial(const GaussAlgebra& G, const ParamMultiset& a, const ParamMultiset& b);

struct HypValue {
    CycloNum value;
    int conductor = 1;
    bool psi_independent = false;
};
HypValue hyp_eval(const FieldPtr& F, const ParamMultiset& a, const ParamMultiset& b, int lambda);

// Balanced F with the values of deg(A)=deg(B) that were found outside
// Q(zeta_{q-1}); this should stay zero.
struct PsiAudit {
    uint64_t checked = 0;
    uint64_t violations = 0;
};
PsiAudit psi_audit();
void psi_audit_reset();

// Sum representation with the constraint lambda t_1 ... t_d = 1, divided by
// prod -j(alpha_i, alpha_i^-1 beta_i). Uses its own character sums only.
CycloNum hyp_eval_oracle(const FieldPtr& F, const ParamMultiset& a, const ParamMultiset& b, int lambda);

enum class LauricellaKind { A, B, C, D };
LauricellaKind parse_lauricella_kind(const std::string& s);

// Parameters in the displayed order: F_A(alpha, beta_1..n, gamma_1..n),
// F_B(alpha_1..n, beta_1..n, gamma), F_C(alpha, beta, gamma_1..n),
// F_D(alpha, beta_1..n, gamma).
Graded lauricella_graded(const GaussAlgebra& G, LauricellaKind kind, const std::vector<int>& params,
                         const std::vector<int>& lambdas);
CycloNum lauricella_eval(const FieldPtr& F, LauricellaKind kind, const std::vector<int>& params,
                         const std::vector<int>& lambdas);

// sum over s_1 ... s_d = lambda of prod psi(s_i) alpha_i(s_i), in Q(zeta_{p(q-1)}).
CycloNum kloosterman(const FieldCtx& F, const std::vector<int>& alphas, int lambda);

}  // namespace hgff
