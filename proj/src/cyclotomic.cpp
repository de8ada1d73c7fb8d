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

#include "hgff/cyclotomic.hpp"

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hgff/errors.hpp"

namespace hgff {

namespace {

int mobius(int n) {
    int r = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        r = -r;
    }
    if (n > 1) r = -r;
    return r;
}

std::mutex g_ring_mu;
std::map<int, std::unique_ptr<CycloRing>>& ring_cache() {
    static std::map<int, std::unique_ptr<CycloRing>> cache;
    return cache;
}

struct LiftSolve {
    std::vector<int> pivots;                 // rows of the lift matrix used
    std::vector<std::vector<mpq_class>> inv;  // inverse of the pivot block
};

std::mutex g_lift_mu;
std::map<std::pair<int, int>, std::unique_ptr<LiftSolve>>& lift_cache() {
    static std::map<std::pair<int, int>, std::unique_ptr<LiftSolve>> cache;
    return cache;
}

int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

std::vector<int64_t> cyclo_modulus(int m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    if (m == 1) return {-1, 1};
    int phi = euler_phi(m);
    // Phi_m = prod_{d|m} (1 - x^d)^{mu(m/d)} as a power series truncated at degree phi.
    std::vector<Integer> c(phi + 1);
    c[0] = 1;
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        int mu = mobius(m / d);
        if (mu == 1) {
            for (int i = phi; i >= d; --i) c[i] -= c[i - d];
        } else if (mu == -1) {
            for (int i = d; i <= phi; ++i) c[i] += c[i - d];
        }
    }
    std::vector<int64_t> out(phi + 1);
    for (int i = 0; i <= phi; ++i) {
        if (!c[i].is_small()) throw std::overflow_error("cyclotomic coefficient too large");
        out[i] = c[i].small();
    }
    if (out[phi] != 1) throw std::logic_error("cyclotomic polynomial not monic");
    return out;
}

const CycloRing& cyclo_ring(int m) {
    std::lock_guard<std::mutex> lk(g_ring_mu);
    auto& cache = ring_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    auto r = std::make_unique<CycloRing>();
    r->m = m;
    r->poly = cyclo_modulus(m);
    r->phi = int(r->poly.size()) - 1;
    for (int j = 0; j < r->phi; ++j)
        if (r->poly[j] != 0) r->tail.emplace_back(j, r->poly[j]);
    const CycloRing& ref = *r;
    cache.emplace(m, std::move(r));
    return ref;
}

void cyclo_reduce(const CycloRing& R, Integer* c, int len) {
    const int m = R.m, phi = R.phi;
    if (len > m) {
        for (int i = m; i < len; ++i) {
            if (!c[i].is_zero()) {
                c[i % m] += c[i];
                c[i] = 0;
            }
        }
        len = m;
    }
    for (int i = len - 1; i >= phi; --i) {
        if (c[i].is_zero()) continue;
        const int base = i - phi;
        for (auto [j, a] : R.tail) c[base + j].submul(c[i], Integer(a));
        c[i] = 0;
    }
}

CycloNum::CycloNum() : CycloNum(1) {}

CycloNum::CycloNum(int m) : R_(&cyclo_ring(m)), num_(R_->phi) {}

CycloNum::CycloNum(const CycloRing* r, Coeffs num, Integer den)
    : R_(r), num_(std::move(num)), den_(std::move(den)) {}

CycloNum CycloNum::integer(int m, const Integer& v) {
    CycloNum r(m);
    r.num_[0] = v;
    return r;
}

CycloNum CycloNum::rational(int m, const Integer& num, const Integer& den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    CycloNum r(m);
    r.num_[0] = num;
    r.den_ = den;
    r.normalize();
    return r;
}

CycloNum CycloNum::root(int m, int64_t j) {
    const CycloRing& R = cyclo_ring(m);
    int64_t k = mod(j, m);
    std::vector<Integer> c(k + 1);
    c[k] = 1;
    CycloNum r(m);
    if (k < R.phi) {
        r.num_[k] = 1;
        return r;
    }
    cyclo_reduce(R, c.data(), int(c.size()));
    for (int i = 0; i < R.phi; ++i) r.num_[i] = std::move(c[i]);
    return r;
}

CycloNum CycloNum::from_group_ring(int m, std::vector<Integer> c, const Integer& den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    const CycloRing& R = cyclo_ring(m);
    if (int(c.size()) < R.phi) c.resize(R.phi);
    cyclo_reduce(R, c.data(), int(c.size()));
    Coeffs num(R.phi);
    for (int i = 0; i < R.phi; ++i) num[i] = std::move(c[i]);
    CycloNum r(&R, std::move(num), den);
    r.normalize();
    return r;
}

CycloNum CycloNum::from_coeffs(int m, Coeffs num, const Integer& den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    const CycloRing& R = cyclo_ring(m);
    if (int(num.size()) != R.phi) throw std::invalid_argument("coefficient count differs from phi(m)");
    CycloNum r(&R, std::move(num), den);
    r.normalize();
    return r;
}

void CycloNum::normalize() {
    bool zero = true;
    for (auto& c : num_)
        if (!c.is_zero()) {
            zero = false;
            break;
        }
    if (zero) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        den_.negate();
        for (auto& c : num_) c.negate();
    }
    if (den_.is_one()) return;
    Integer g = den_;
    for (auto& c : num_) {
        if (c.is_zero()) continue;
        g = Integer::gcd(g, c);
        if (g.is_one()) return;
    }
    if (g.is_one()) return;
    for (auto& c : num_)
        if (!c.is_zero()) c = Integer::divexact(c, g);
    den_ = Integer::divexact(den_, g);
}

bool CycloNum::is_zero() const {
    for (auto& c : num_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (int i = 1; i < dim(); ++i)
        if (!num_[i].is_zero()) return false;
    return true;
}

bool CycloNum::is_integer() const { return is_rational() && den_.is_one(); }

std::pair<Integer, Integer> CycloNum::rational_value() const { return {num_[0], den_}; }

void CycloNum::align(CycloNum& a, CycloNum& b) {
    if (a.R_ == b.R_) return;
    int ma = a.m(), mb = b.m();
    if (mb % ma == 0) a = a.lift(mb);
    else if (ma % mb == 0) b = b.lift(ma);
    else throw ConductorMismatch("conductors " + std::to_string(ma) + " and " + std::to_string(mb));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (o.R_ != R_) {
        CycloNum b = o;
        align(*this, b);
        return *this += b;
    }
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        for (int i = 0; i < dim(); ++i) num_[i] += o.num_[i];
    } else {
        for (int i = 0; i < dim(); ++i) {
            num_[i] *= o.den_;
            num_[i].addmul(o.num_[i], den_);
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (o.R_ != R_) {
        CycloNum b = o;
        align(*this, b);
        return *this -= b;
    }
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        for (int i = 0; i < dim(); ++i) num_[i] -= o.num_[i];
    } else {
        for (int i = 0; i < dim(); ++i) {
            num_[i] *= o.den_;
            num_[i].submul(o.num_[i], den_);
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (o.R_ != R_) {
        CycloNum b = o;
        align(*this, b);
        return *this *= b;
    }
    const int n = dim();
    if (n == 1) {
        num_[0] *= o.num_[0];
        den_ *= o.den_;
        normalize();
        return *this;
    }
    boost::container::small_vector<Integer, 16> t(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (num_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) t[i + j].addmul(num_[i], o.num_[j]);
    }
    cyclo_reduce(*R_, t.data(), int(t.size()));
    for (int i = 0; i < n; ++i) num_[i] = std::move(t[i]);
    den_ *= o.den_;
    normalize();
    return *this;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& c : r.num_) c.negate();
    return r;
}

CycloNum CycloNum::scale(const Integer& num, const Integer& den) const {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    CycloNum r(*this);
    for (auto& c : r.num_) c *= num;
    r.den_ *= den;
    r.normalize();
    return r;
}

CycloNum CycloNum::mul_root(int64_t k) const {
    const int m = R_->m, n = dim();
    int64_t s = mod(k, m);
    if (s == 0) return *this;
    if (m == 2) return -*this;
    std::vector<Integer> t(m);
    for (int i = 0; i < n; ++i) t[(i + s) % m] = num_[i];
    cyclo_reduce(*R_, t.data(), m);
    CycloNum r(R_, Coeffs(n), den_);
    for (int i = 0; i < n; ++i) r.num_[i] = std::move(t[i]);
    return r;
}

CycloNum CycloNum::galois(int64_t s) const {
    const int m = R_->m, n = dim();
    int64_t ss = mod(s, m);
    if (std::gcd(ss, int64_t(m)) != 1) throw NotCoprime("galois exponent not coprime to conductor");
    if (ss == 1 % m) return *this;
    std::vector<Integer> t(m);
    for (int i = 0; i < n; ++i)
        if (!num_[i].is_zero()) t[(int64_t(i) * ss) % m] = num_[i];
    cyclo_reduce(*R_, t.data(), m);
    CycloNum r(R_, Coeffs(n), den_);
    for (int i = 0; i < n; ++i) r.num_[i] = std::move(t[i]);
    return r;
}

CycloNum CycloNum::lift(int target) const {
    const int m = R_->m;
    if (target == m) return *this;
    if (target % m != 0) throw NotDivisor("lift target not a multiple of conductor");
    const CycloRing& T = cyclo_ring(target);
    const int step = target / m;
    std::vector<Integer> t(std::max(T.phi, (dim() - 1) * step + 1));
    for (int i = 0; i < dim(); ++i)
        if (!num_[i].is_zero()) t[size_t(i) * step] = num_[i];
    cyclo_reduce(T, t.data(), int(t.size()));
    CycloNum r(&T, Coeffs(T.phi), den_);
    for (int i = 0; i < T.phi; ++i) r.num_[i] = std::move(t[i]);
    return r;
}

bool CycloNum::in_subfield(int d) const {
    const int m = R_->m;
    if (d <= 0 || m % d != 0) throw NotDivisor("subfield conductor must divide m");
    for (int s = 1; s < m; ++s) {
        if (s % d != 1 % d || std::gcd(s, m) != 1) continue;
        if (galois(s) != *this) return false;
    }
    return true;
}

std::optional<CycloNum> CycloNum::compress(int d) const {
    const int m = R_->m;
    if (d <= 0 || m % d != 0) throw NotDivisor("subfield conductor must divide m");
    if (d == m) return *this;
    const LiftSolve* ls = nullptr;
    {
        std::lock_guard<std::mutex> lk(g_lift_mu);
        auto& cache = lift_cache();
        auto it = cache.find({m, d});
        if (it != cache.end()) ls = it->second.get();
    }
    const int pd = euler_phi(d), pm = dim();
    if (!ls) {
        // Columns: coordinates of zeta_d^i lifted into Q(zeta_m).
        std::vector<std::vector<mpq_class>> cols(pd, std::vector<mpq_class>(pm));
        for (int i = 0; i < pd; ++i) {
            CycloNum z = CycloNum::root(d, i).lift(m);
            for (int r = 0; r < pm; ++r) cols[i][r] = mpq_class(z.num_[r].str());
        }
        // Row-reduce the transpose to pick independent rows.
        std::vector<std::vector<mpq_class>> a(pm, std::vector<mpq_class>(pd));
        for (int r = 0; r < pm; ++r)
            for (int i = 0; i < pd; ++i) a[r][i] = cols[i][r];
        std::vector<int> piv;
        std::vector<std::vector<mpq_class>> basis;  // echelon rows with their origin
        std::vector<std::vector<mpq_class>> work;
        std::vector<int> lead;
        for (int r = 0; r < pm && int(piv.size()) < pd; ++r) {
            std::vector<mpq_class> v = a[r];
            for (size_t k = 0; k < work.size(); ++k) {
                if (v[lead[k]] != 0) {
                    mpq_class f = v[lead[k]] / work[k][lead[k]];
                    for (int i = 0; i < pd; ++i) v[i] -= f * work[k][i];
                }
            }
            int l = -1;
            for (int i = 0; i < pd; ++i)
                if (v[i] != 0) {
                    l = i;
                    break;
                }
            if (l < 0) continue;
            work.push_back(v);
            lead.push_back(l);
            piv.push_back(r);
        }
        if (int(piv.size()) != pd) throw std::logic_error("lift matrix rank deficient");
        // Invert the pd x pd block of pivot rows.
        std::vector<std::vector<mpq_class>> blk(pd, std::vector<mpq_class>(2 * pd));
        for (int r = 0; r < pd; ++r) {
            for (int i = 0; i < pd; ++i) blk[r][i] = a[piv[r]][i];
            blk[r][pd + r] = 1;
        }
        for (int c = 0; c < pd; ++c) {
            int pr = c;
            while (blk[pr][c] == 0) ++pr;
            std::swap(blk[pr], blk[c]);
            mpq_class iv = 1 / blk[c][c];
            for (auto& x : blk[c]) x *= iv;
            for (int r = 0; r < pd; ++r) {
                if (r == c || blk[r][c] == 0) continue;
                mpq_class f = blk[r][c];
                for (int k = 0; k < 2 * pd; ++k) blk[r][k] -= f * blk[c][k];
            }
        }
        auto sol = std::make_unique<LiftSolve>();
        sol->pivots = piv;
        sol->inv.assign(pd, std::vector<mpq_class>(pd));
        for (int r = 0; r < pd; ++r)
            for (int k = 0; k < pd; ++k) sol->inv[r][k] = blk[r][pd + k];
        std::lock_guard<std::mutex> lk(g_lift_mu);
        auto& cache = lift_cache();
        auto it = cache.find({m, d});
        if (it == cache.end()) it = cache.emplace(std::make_pair(m, d), std::move(sol)).first;
        ls = it->second.get();
    }
    std::vector<mpq_class> rhs(pd);
    for (int r = 0; r < pd; ++r) rhs[r] = mpq_class(num_[ls->pivots[r]].str());
    mpz_class common = 1;
    std::vector<mpq_class> b(pd);
    for (int i = 0; i < pd; ++i) {
        mpq_class s = 0;
        for (int k = 0; k < pd; ++k) s += ls->inv[i][k] * rhs[k];
        b[i] = s;
        common = lcm(common, mpz_class(s.get_den()));
    }
    Coeffs out(pd);
    for (int i = 0; i < pd; ++i) {
        mpz_class v = b[i].get_num() * (common / b[i].get_den());
        out[i] = Integer::parse(v.get_str());
    }
    Integer cd = Integer::parse(common.get_str()) * den_;
    CycloNum cand = CycloNum::from_coeffs(d, std::move(out), cd);
    if (cand.lift(m) != *this) return std::nullopt;
    return cand;
}

CycloNum CycloNum::compress_min() const {
    const int m = R_->m;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        if (!in_subfield(d)) continue;
        if (auto c = compress(d)) return *c;
    }
    return *this;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const int n = dim();
    if (n == 1) return CycloNum::rational(m(), den_, num_[0]);
    using Poly = std::vector<mpq_class>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    Poly f(R_->poly.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] = mpq_class(mpz_class(std::to_string(R_->poly[i])));
    Poly a(n);
    for (int i = 0; i < n; ++i) a[i] = mpq_class(num_[i].str());
    trim(a);
    // Track s with s*a = r (mod f).
    Poly r0 = f, r1 = a, s0 = {}, s1 = {mpq_class(1)};
    while (r1.size() > 1) {
        Poly qt(r0.size() - r1.size() + 1);
        Poly rem = r0;
        for (int i = int(rem.size()) - 1; i >= int(r1.size()) - 1; --i) {
            if (rem[i] == 0) continue;
            mpq_class c = rem[i] / r1.back();
            int sh = i - int(r1.size()) + 1;
            qt[sh] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[sh + j] -= c * r1[j];
        }
        trim(rem);
        Poly s2(std::max(s0.size(), qt.size() + s1.size()));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qt.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= qt[i] * s1[j];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw DivisionByZero("element not invertible");
    mpq_class c = r1[0];
    mpz_class common = 1;
    for (auto& x : s1) {
        x /= c;
        common = lcm(common, mpz_class(x.get_den()));
    }
    std::vector<Integer> g(std::max<size_t>(s1.size(), n));
    for (size_t i = 0; i < s1.size(); ++i) {
        mpz_class v = s1[i].get_num() * (common / s1[i].get_den());
        g[i] = Integer::parse(v.get_str());
    }
    CycloNum inv = CycloNum::from_group_ring(m(), std::move(g), Integer::parse(common.get_str()));
    return inv.scale(den_);
}

std::complex<double> CycloNum::embed() const {
    const long double tau = 6.283185307179586476925286766559L;
    std::complex<long double> s = 0;
    long double d = den_.to_double();
    for (int i = 0; i < dim(); ++i) {
        if (num_[i].is_zero()) continue;
        long double ang = tau * i / R_->m;
        s += std::complex<long double>(std::cos(ang), std::sin(ang)) * (num_[i].to_double() / d);
    }
    return {double(s.real()), double(s.imag())};
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.R_ != b.R_) {
        CycloNum x = a, y = b;
        CycloNum::align(x, y);
        return x == y;
    }
    if (a.den_ != b.den_) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.num_[i] != b.num_[i]) return false;
    return true;
}

size_t CycloNum::hash() const {
    size_t h = std::hash<int>{}(m()) ^ (den_.hash() * 31u);
    for (auto& c : num_) h = h * 1000003u ^ c.hash();
    return h;
}

std::string CycloNum::coeff_str(int i) const {
    Integer g = Integer::gcd(num_[i], den_);
    if (num_[i].is_zero()) return "0/1";
    return Integer::divexact(num_[i], g).str() + "/" + Integer::divexact(den_, g).str();
}

std::vector<std::string> CycloNum::coeff_strs() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (int i = 0; i < dim(); ++i) out.push_back(coeff_str(i));
    return out;
}

CycloNum CycloNum::from_coeff_strs(int m, const std::vector<std::string>& cs) {
    const CycloRing& R = cyclo_ring(m);
    if (int(cs.size()) != R.phi) throw std::invalid_argument("coefficient count differs from phi(m)");
    CycloNum acc(m);
    for (int i = 0; i < R.phi; ++i) {
        const std::string& s = cs[i];
        auto slash = s.find('/');
        Integer nu = Integer::parse(s.substr(0, slash));
        Integer de = slash == std::string::npos ? Integer(1) : Integer::parse(s.substr(slash + 1));
        if (nu.is_zero()) continue;
        CycloNum t(m);
        t.num_[i] = nu;
        t.den_ = de;
        t.normalize();
        acc += t;
    }
    return acc;
}

std::string CycloNum::str() const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        if (num_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeff_str(i) + ")";
        if (i) out += "*z" + std::to_string(m()) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace hgff
