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

#include "hgff/integer.hpp"

#include <functional>
#include <stdexcept>

namespace hgff {

mpz_srcptr Integer::view(mpz_t tmp) const {
    if (big_) return big_;
    mpz_init_set_si(tmp, v_);
    return tmp;
}

void Integer::promote() {
    if (big_) return;
    big_ = new __mpz_struct;
    mpz_init_set_si(big_, v_);
}

void Integer::demote() {
    if (big_ && mpz_fits_slong_p(big_)) {
        v_ = mpz_get_si(big_);
        mpz_clear(big_);
        delete big_;
        big_ = nullptr;
    }
}

void Integer::slow_add(const Integer& o, bool sub) {
    promote();
    mpz_t t;
    bool tmp = o.is_small();
    mpz_srcptr ov = o.view(t);
    if (sub) mpz_sub(big_, big_, ov);
    else mpz_add(big_, big_, ov);
    if (tmp) mpz_clear(t);
    demote();
}

void Integer::slow_mul(const Integer& o) {
    promote();
    mpz_t t;
    bool tmp = o.is_small();
    mpz_srcptr ov = o.view(t);
    mpz_mul(big_, big_, ov);
    if (tmp) mpz_clear(t);
    demote();
}

void Integer::slow_addmul(const Integer& a, const Integer& b, bool sub) {
    promote();
    mpz_t ta, tb;
    bool sa = a.is_small(), sb = b.is_small();
    mpz_srcptr av = a.view(ta);
    mpz_srcptr bv = b.view(tb);
    if (sub) mpz_submul(big_, av, bv);
    else mpz_addmul(big_, av, bv);
    if (sa) mpz_clear(ta);
    if (sb) mpz_clear(tb);
    demote();
}

int Integer::cmp(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return (a.v_ > b.v_) - (a.v_ < b.v_);
    mpz_t ta, tb;
    bool sa = a.is_small(), sb = b.is_small();
    int r = mpz_cmp(a.view(ta), b.view(tb));
    if (sa) mpz_clear(ta);
    if (sb) mpz_clear(tb);
    return r;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.v_ != INT64_MIN && b.v_ != INT64_MIN) {
        uint64_t x = a.v_ < 0 ? -a.v_ : a.v_;
        uint64_t y = b.v_ < 0 ? -b.v_ : b.v_;
        if (x == 0) return Integer(int64_t(y));
        if (y == 0) return Integer(int64_t(x));
        int shift = __builtin_ctzll(x | y);
        x >>= __builtin_ctzll(x);
        while (y != 0) {
            y >>= __builtin_ctzll(y);
            if (x > y) std::swap(x, y);
            y -= x;
        }
        return Integer(int64_t(x << shift));
    }
    Integer r;
    r.promote();
    mpz_t ta, tb;
    bool sa = a.is_small(), sb = b.is_small();
    mpz_gcd(r.big_, a.view(ta), b.view(tb));
    if (sa) mpz_clear(ta);
    if (sb) mpz_clear(tb);
    r.demote();
    return r;
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.v_ == INT64_MIN && b.v_ == -1)) return Integer(a.v_ / b.v_);
    Integer r;
    r.promote();
    mpz_t ta, tb;
    bool sa = a.is_small(), sb = b.is_small();
    mpz_divexact(r.big_, a.view(ta), b.view(tb));
    if (sa) mpz_clear(ta);
    if (sb) mpz_clear(tb);
    r.demote();
    return r;
}

std::pair<Integer, Integer> Integer::divmod(const Integer& a, const Integer& b) {
    if (b.sign() <= 0) throw std::domain_error("divmod needs a positive divisor");
    Integer qt, rm;
    qt.promote();
    rm.promote();
    mpz_t ta, tb;
    bool sa = a.is_small(), sb = b.is_small();
    mpz_fdiv_qr(qt.big_, rm.big_, a.view(ta), b.view(tb));
    if (sa) mpz_clear(ta);
    if (sb) mpz_clear(tb);
    qt.demote();
    rm.demote();
    return {qt, rm};
}

Integer Integer::pow(const Integer& base, unsigned e) {
    Integer r(1), b(base);
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

Integer Integer::parse(std::string_view s) {
    std::string str(s);
    Integer r;
    r.promote();
    if (str.empty() || mpz_set_str(r.big_, str.c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: " + str);
    r.demote();
    return r;
}

std::string Integer::str() const {
    if (!big_) return std::to_string(v_);
    char* buf = mpz_get_str(nullptr, 10, big_);
    std::string out(buf);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(buf, out.size() + 1);
    return out;
}

double Integer::to_double() const {
    if (!big_) return double(v_);
    return mpz_get_d(big_);
}

size_t Integer::hash() const {
    if (!big_) return std::hash<int64_t>{}(v_);
    return std::hash<std::string>{}(str());
}

}  // namespace hgff
