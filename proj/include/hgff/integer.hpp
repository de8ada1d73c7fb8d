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

#include <gmp.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace hgff {

// Arbitrary precision integer. Values that fit in int64 stay inline; anything
// larger spills to a heap mpz. Every operation is exact.
class Integer {
public:
    Integer() noexcept = default;
    Integer(int64_t v) noexcept : v_(v) {}  // NOLINT(implicit)
    Integer(const Integer& o) : v_(o.v_) {
        if (o.big_) copy_big(o.big_);
    }
    Integer(Integer&& o) noexcept : v_(o.v_), big_(o.big_) { o.big_ = nullptr; }
    ~Integer() { release(); }

    Integer& operator=(const Integer& o) {
        if (this == &o) return *this;
        if (o.big_) {
            if (big_) mpz_set(big_, o.big_);
            else copy_big(o.big_);
        } else {
            release();
            v_ = o.v_;
        }
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        if (this == &o) return *this;
        release();
        v_ = o.v_;
        big_ = o.big_;
        o.big_ = nullptr;
        return *this;
    }
    Integer& operator=(int64_t v) noexcept {
        release();
        v_ = v;
        return *this;
    }

    static Integer parse(std::string_view s);
    std::string str() const;
    double to_double() const;

    bool is_small() const noexcept { return big_ == nullptr; }
    int64_t small() const noexcept { return v_; }
    bool is_zero() const noexcept { return !big_ && v_ == 0; }
    bool is_one() const noexcept { return !big_ && v_ == 1; }
    int sign() const noexcept {
        if (big_) return mpz_sgn(big_);
        return (v_ > 0) - (v_ < 0);
    }

    Integer& operator+=(const Integer& o) {
        int64_t r;
        if (!big_ && !o.big_ && !__builtin_add_overflow(v_, o.v_, &r)) {
            v_ = r;
            return *this;
        }
        slow_add(o, false);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        int64_t r;
        if (!big_ && !o.big_ && !__builtin_sub_overflow(v_, o.v_, &r)) {
            v_ = r;
            return *this;
        }
        slow_add(o, true);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        int64_t r;
        if (!big_ && !o.big_ && !__builtin_mul_overflow(v_, o.v_, &r)) {
            v_ = r;
            return *this;
        }
        slow_mul(o);
        return *this;
    }
    // this += a * b
    void addmul(const Integer& a, const Integer& b) {
        int64_t t, r;
        if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.v_, b.v_, &t) &&
            !__builtin_add_overflow(v_, t, &r)) {
            v_ = r;
            return;
        }
        slow_addmul(a, b, false);
    }
    // this -= a * b
    void submul(const Integer& a, const Integer& b) {
        int64_t t, r;
        if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.v_, b.v_, &t) &&
            !__builtin_sub_overflow(v_, t, &r)) {
            v_ = r;
            return;
        }
        slow_addmul(a, b, true);
    }
    void negate() {
        if (!big_ && v_ != INT64_MIN) {
            v_ = -v_;
            return;
        }
        promote();
        mpz_neg(big_, big_);
        demote();
    }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(Integer a) {
        a.negate();
        return a;
    }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.v_ == b.v_;
        return cmp(a, b) == 0;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }
    static int cmp(const Integer& a, const Integer& b);

    static Integer gcd(const Integer& a, const Integer& b);
    // a / b where b divides a exactly
    static Integer divexact(const Integer& a, const Integer& b);
    // floor division and remainder with b > 0
    static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);
    static Integer pow(const Integer& base, unsigned e);
    Integer abs() const {
        Integer r(*this);
        if (r.sign() < 0) r.negate();
        return r;
    }
    size_t hash() const;

    // Read-only mpz view; tmp is used when the value is inline.
    mpz_srcptr view(mpz_t tmp) const;

private:
    void release() noexcept {
        if (big_) {
            mpz_clear(big_);
            delete big_;
            big_ = nullptr;
        }
    }
    void copy_big(mpz_srcptr src) {
        big_ = new __mpz_struct;
        mpz_init_set(big_, src);
    }
    void promote();
    void demote();
    void slow_add(const Integer& o, bool sub);
    void slow_mul(const Integer& o);
    void slow_addmul(const Integer& a, const Integer& b, bool sub);

    int64_t v_ = 0;
    __mpz_struct* big_ = nullptr;
};

}  // namespace hgff
