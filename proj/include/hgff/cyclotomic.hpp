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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hgff/integer.hpp"

namespace hgff {

struct CycloRing {
    int m = 1;
    int phi = 1;
    std::vector<int64_t> poly;                      // Phi_m, low degree first, monic
    std::vector<std::pair<int, int64_t>> tail;      // nonzero coefficients below the leading term
};

// Shared, immutable ring data for conductor m. Safe to call concurrently.
const CycloRing& cyclo_ring(int m);
std::vector<int64_t> cyclo_modulus(int m);
int euler_phi(int m);

// An element of Q(zeta_m) stored as integer numerators over one positive
// denominator, in the power basis reduced modulo Phi_m.
class CycloNum {
public:
    using Coeffs = boost::container::small_vector<Integer, 8>;

    CycloNum();
    explicit CycloNum(int m);

    static CycloNum integer(int m, const Integer& v);
    static CycloNum rational(int m, const Integer& num, const Integer& den);
    static CycloNum root(int m, int64_t j);
    // Group-ring element sum c[i] zeta^i (any length, indices taken mod m) over den.
    static CycloNum from_group_ring(int m, std::vector<Integer> c, const Integer& den = 1);
    static CycloNum from_coeffs(int m, Coeffs num, const Integer& den);

    int m() const { return R_->m; }
    int dim() const { return R_->phi; }
    const CycloRing& ring() const { return *R_; }
    const Integer& num(int i) const { return num_[i]; }
    const Integer& den() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    // Constant coefficient as num/den pair; meaningful when is_rational().
    std::pair<Integer, Integer> rational_value() const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const;

    CycloNum inverse() const;
    CycloNum mul_root(int64_t k) const;
    CycloNum scale(const Integer& num, const Integer& den = 1) const;
    CycloNum galois(int64_t s) const;
    CycloNum conj() const { return galois(-1); }
    CycloNum lift(int target) const;
    // Fixed by every sigma_s with s = 1 mod d; d must divide m.
    bool in_subfield(int d) const;
    // The same element written over conductor d, if it lies in Q(zeta_d).
    std::optional<CycloNum> compress(int d) const;
    // Smallest conductor dividing m over which the element can be written.
    CycloNum compress_min() const;

    std::complex<double> embed() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }
    size_t hash() const;

    std::string coeff_str(int i) const;
    std::vector<std::string> coeff_strs() const;
    static CycloNum from_coeff_strs(int m, const std::vector<std::string>& cs);
    std::string str() const;

private:
    CycloNum(const CycloRing* r, Coeffs num, Integer den);
    void normalize();
    static void align(CycloNum& a, CycloNum& b);

    const CycloRing* R_;
    Coeffs num_;
    Integer den_{1};
};

// Reduce a group-ring coefficient vector modulo Phi_m in place; the first phi
// entries hold the result afterwards.
void cyclo_reduce(const CycloRing& R, Integer* c, int len);

}  // namespace hgff
