/*
   Copyright 2026 The symquot authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SYMQUOT_BIGINT_HPP
#define SYMQUOT_BIGINT_HPP

#include <cstdint>
#include <type_traits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symquot {

/// Arbitrary-precision signed integer, sign-magnitude with base 10^9 limbs.
/// All series coefficients, lattice counts and linear-algebra entries in this
/// library ultimately live on top of this type; no floating point anywhere.
class BigInt {
  public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v > 0 ? 1 : -1;
        unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                     : 0ULL - static_cast<unsigned long long>(v);
        while (u > 0) {
            limbs_.push_back(static_cast<uint32_t>(u % kBase));
            u /= kBase;
        }
    }
    template <typename T>
        requires(std::is_integral_v<T> && !std::is_same_v<T, long long>)
    BigInt(T v) : BigInt(static_cast<long long>(v)) {}

    explicit BigInt(std::string_view dec) {
        size_t pos = 0;
        int sign = 1;
        if (pos < dec.size() && (dec[pos] == '+' || dec[pos] == '-')) {
            if (dec[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos == dec.size()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt acc;
        for (; pos < dec.size(); ++pos) {
            char c = dec[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
            acc = acc * BigInt(10) + BigInt(c - '0');
        }
        *this = acc;
        if (sign < 0) sign_ = -sign_;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return sign_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] % 2 == 0); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// q = trunc(a/b), r = a - q*b (remainder carries the sign of a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static int compare(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r(1), b = base;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        char buf[16];
        for (size_t i = limbs_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof(buf), "%09u", limbs_[i]);
            s += buf;
        }
        return s;
    }

    /// Throws if the value does not fit.
    long long to_int64() const {
        long long r = 0;
        const long long lim = INT64_MAX / kBase;
        for (size_t i = limbs_.size(); i-- > 0;) {
            if (r > lim) throw std::overflow_error("BigInt: does not fit in int64");
            r = r * kBase;
            if (r > INT64_MAX - limbs_[i]) throw std::overflow_error("BigInt: does not fit in int64");
            r += limbs_[i];
        }
        return sign_ < 0 ? -r : r;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

  private:
    static constexpr uint64_t kBase = 1000000000ULL;

    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> limbs_;  // little-endian base 10^9, no leading zeros

    static void trim(std::vector<uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const std::vector<uint32_t>&big = a.size() >= b.size() ? a : b, &small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry + r[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = r[k] + carry;
                r[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint32_t d) {
        std::vector<uint32_t> r(a.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * d + carry;
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    static uint32_t div_small_inplace(std::vector<uint32_t>& a, uint32_t d) {
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = rem * kBase + a[i];
            a[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(a);
        return static_cast<uint32_t>(rem);
    }

    // Knuth algorithm D over base-10^9 limbs.
    static void divmod_mag(std::vector<uint32_t> a, std::vector<uint32_t> b, std::vector<uint32_t>& q,
                           std::vector<uint32_t>& r) {
        if (cmp_mag(a, b) < 0) {
            q.clear();
            r = std::move(a);
            return;
        }
        if (b.size() == 1) {
            q = a;
            uint32_t rem = div_small_inplace(q, b[0]);
            r.clear();
            if (rem) r.push_back(rem);
            return;
        }
        const uint32_t dnorm = static_cast<uint32_t>(kBase / (static_cast<uint64_t>(b.back()) + 1));
        if (dnorm > 1) {
            a = mul_small(a, dnorm);
            b = mul_small(b, dnorm);
        }
        const size_t n = b.size();
        const size_t m = a.size() - n;
        a.push_back(0);
        q.assign(m + 1, 0);
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = static_cast<uint64_t>(a[j + n]) * kBase + a[j + n - 1];
            uint64_t qhat = num / b[n - 1];
            uint64_t rhat = num % b[n - 1];
            while (qhat >= kBase || qhat * b[n - 2] > rhat * kBase + a[j + n - 2]) {
                --qhat;
                rhat += b[n - 1];
                if (rhat >= kBase) break;
            }
            uint64_t borrow = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * b[i] + borrow;
                borrow = p / kBase;
                int64_t t = static_cast<int64_t>(a[j + i]) - static_cast<int64_t>(p % kBase);
                if (t < 0) {
                    t += kBase;
                    ++borrow;
                }
                a[j + i] = static_cast<uint32_t>(t);
            }
            int64_t top = static_cast<int64_t>(a[j + n]) - static_cast<int64_t>(borrow);
            if (top < 0) {
                --qhat;
                uint64_t carry = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(a[j + i]) + b[i] + carry;
                    a[j + i] = static_cast<uint32_t>(s % kBase);
                    carry = s / kBase;
                }
                top += static_cast<int64_t>(carry);
            }
            a[j + n] = static_cast<uint32_t>(top);
            q[j] = static_cast<uint32_t>(qhat);
        }
        trim(q);
        a.resize(n);
        trim(a);
        if (dnorm > 1) div_small_inplace(a, dnorm);
        r = std::move(a);
    }
};

}  // namespace symquot

#endif
