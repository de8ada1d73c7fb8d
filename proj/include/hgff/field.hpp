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
#include <memory>
#include <string>
#include <vector>

namespace hgff {

// A finite field F_q, q = p^e. Elements are integer codes 0..q-1 holding the
// coefficient vector of a polynomial in x modulo `modulus`, base p, constant
// term least significant.
class FieldCtx {
public:
    int p = 0;
    int e = 0;
    int q = 0;
    std::vector<int> modulus;  // low degree first, monic, size e+1
    int generator = 0;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const { return sub(0, a); }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        int s = dlog_[a] + dlog_[b];
        if (s >= q - 1) s -= q - 1;
        return exp_[s];
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, int64_t k) const;
    // g^k for any integer k.
    int gpow(int64_t k) const {
        int64_t r = k % (q - 1);
        if (r < 0) r += q - 1;
        return exp_[r];
    }
    // Image of an integer under Z -> F_p -> F_q.
    int from_int(int64_t n) const {
        int64_t r = n % p;
        return int(r < 0 ? r + p : r);
    }
    int one_minus(int a) const { return sub(1, a); }

    int dlog(int x) const;
    int dlog_or_neg(int x) const { return dlog_[x]; }  // -1 for zero
    int trace(int x) const { return trace_[x]; }
    bool is_square(int x) const { return x != 0 && dlog_[x] % 2 == 0; }

    const std::vector<int>& dlog_table() const { return dlog_; }
    const std::vector<int>& exp_table() const { return exp_; }
    const std::vector<int>& trace_table() const { return trace_; }

    std::string modulus_str() const;

    friend std::shared_ptr<const FieldCtx> build_field(int p, int e);

private:
    std::vector<int> dlog_;
    std::vector<int> exp_;
    std::vector<int> trace_;
    std::vector<int> pw_;  // p^i
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Default bound 2^20; HGFF_FIELD_BOUND overrides.
int64_t field_bound();
FieldPtr build_field(int p, int e);
// Factor q = p^e and build.
FieldPtr build_field_q(int64_t q);
bool is_prime(int64_t n);

// F_q inside F_{q^l}. The base generator maps to a root of the base modulus,
// chosen with the smallest element code.
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr base, FieldPtr ext);
    const FieldCtx& base() const { return *base_; }
    const FieldCtx& ext() const { return *ext_; }
    int degree() const { return l_; }
    int embed(int x) const { return embed_[x]; }
    // Norm of an extension element, as a base element code.
    int norm(int x) const;
    // Base code of an extension element lying in the image, or -1.
    int restrict_to_base(int x) const { return restrict_[x]; }

private:
    FieldPtr base_, ext_;
    int l_ = 1;
    std::vector<int> embed_;
    std::vector<int> restrict_;
    int64_t norm_exp_ = 1;
};

}  // namespace hgff
