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

#ifndef SYMQUOT_CYCLOTOMIC_HPP
#define SYMQUOT_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symquot/rational.hpp"

namespace symquot {

namespace detail {

/// Dense rational polynomial helpers (coefficients indexed by degree).
using RatPoly = std::vector<Rational>;

inline void ratpoly_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ratpoly_trim(r);
    return r;
}

inline void ratpoly_divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.empty()) throw std::domain_error("ratpoly: division by zero polynomial");
    ratpoly_trim(a);
    q.clear();
    if (a.size() < b.size()) {
        r = std::move(a);
        return;
    }
    q.assign(a.size() - b.size() + 1, Rational());
    const Rational lead_inv = b.back().inverse();
    const size_t db = b.size() - 1;
    for (size_t k = a.size(); k-- > db;) {
        Rational f = a[k] * lead_inv;
        if (!f.is_zero()) {
            const size_t shift = k - db;
            q[shift] = f;
            for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        }
    }
    a.resize(db);
    ratpoly_trim(a);
    r = std::move(a);
}

/// Extended Euclid in Q[x]: returns g (monic gcd) and u with u*a = g mod b.
inline void ratpoly_half_ext_gcd(RatPoly a, RatPoly b, RatPoly& g, RatPoly& u) {
    RatPoly u0{Rational(1)}, u1{};
    ratpoly_trim(a);
    ratpoly_trim(b);
    while (!b.empty()) {
        RatPoly q, r;
        ratpoly_divmod(a, b, q, r);
        RatPoly u2 = u0;
        RatPoly qu = ratpoly_mul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size());
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        ratpoly_trim(u2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        a = std::move(b);
        b = std::move(r);
    }
    g = std::move(a);
    u = std::move(u0);
    if (!g.empty() && !g.back().is_one()) {
        Rational inv = g.back().inverse();
        for (auto& c : g) c *= inv;
        for (auto& c : u) c *= inv;
    }
}

/// Exact division of integer polynomials with monic divisor.
inline std::vector<BigInt> intpoly_divexact_monic(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    if (b.empty() || !b.back().is_one()) throw std::invalid_argument("intpoly: divisor must be monic");
    if (a.size() < b.size()) throw std::invalid_argument("intpoly: degree underflow");
    std::vector<BigInt> q(a.size() - b.size() + 1);
    const size_t db = b.size() - 1;
    for (size_t k = a.size(); k-- > db;) {
        BigInt f = a[k];
        if (!f.is_zero()) {
            const size_t shift = k - db;
            q[shift] = f;
            for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        }
    }
    for (size_t j = 0; j + 1 < b.size(); ++j)
        if (!a[j].is_zero()) throw std::logic_error("intpoly: division not exact");
    return q;
}

}  // namespace detail

/// Computes the N-th cyclotomic polynomial with integer coefficients by
/// repeatedly dividing x^d - 1 by the lower cyclotomic factors.
inline std::vector<BigInt> cyclotomic_polynomial(unsigned N) {
    if (N == 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    std::map<unsigned, std::vector<BigInt>> phi;
    for (unsigned d = 1; d <= N; ++d) {
        if (N % d != 0) continue;
        std::vector<BigInt> num(d + 1);
        num[0] = BigInt(-1);
        num[d] = BigInt(1);
        for (auto& [e, p] : phi)
            if (d % e == 0) num = detail::intpoly_divexact_monic(std::move(num), p);
        phi[d] = std::move(num);
    }
    return phi[N];
}

/// Immutable per-conductor context: the minimal polynomial and a reduction
/// table for powers of the root up to what products and conjugation need.
class CyclotomicField {
  public:
    static std::shared_ptr<const CyclotomicField> get(unsigned N) {
        static std::mutex mu;
        static std::map<unsigned, std::shared_ptr<const CyclotomicField>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(N);
        if (it != registry.end()) return it->second;
        auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(N));
        registry.emplace(N, field);
        return field;
    }

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }
    const std::vector<BigInt>& minimal_polynomial() const { return phi_; }

    /// Reduces a polynomial in the root (coefficients by exponent) into the
    /// canonical basis 1, z, ..., z^{degree-1}.
    std::vector<Rational> reduce(const std::vector<Rational>& p) const {
        std::vector<Rational> out(degree_);
        for (size_t k = 0; k < p.size(); ++k) {
            if (p[k].is_zero()) continue;
            if (k < degree_) {
                out[k] += p[k];
            } else {
                if (k - degree_ >= power_rows_.size())
                    throw std::invalid_argument("CyclotomicField: exponent beyond reduction table");
                const auto& row = power_rows_[k - degree_];
                for (unsigned j = 0; j < degree_; ++j)
                    if (!row[j].is_zero()) out[j] += p[k] * Rational(row[j]);
            }
        }
        return out;
    }

  private:
    explicit CyclotomicField(unsigned N) : conductor_(N), phi_(cyclotomic_polynomial(N)) {
        degree_ = static_cast<unsigned>(phi_.size()) - 1;
        // rows for z^{degree}, z^{degree+1}, ..., up to what squaring a
        // reduced element or writing z^{N-1} requires
        unsigned maxpow = degree_ >= 1 ? 2 * degree_ - 2 : 0;
        if (N >= 1 && N - 1 > maxpow) maxpow = N - 1;
        if (maxpow < degree_) maxpow = degree_;
        std::vector<BigInt> row(degree_);
        for (unsigned j = 0; j < degree_; ++j) row[j] = -phi_[j];  // z^degree = -(low part)
        power_rows_.push_back(row);
        for (unsigned k = degree_ + 1; k <= maxpow; ++k) {
            std::vector<BigInt> next(degree_);
            const std::vector<BigInt>& prev = power_rows_.back();
            // multiply by z: shift, then fold the overflow through z^degree
            const BigInt& top = prev[degree_ - 1];
            for (unsigned j = 1; j < degree_; ++j) next[j] = prev[j - 1];
            if (!top.is_zero()) {
                for (unsigned j = 0; j < degree_; ++j) next[j] += top * power_rows_[0][j];
            }
            power_rows_.push_back(std::move(next));
        }
    }

    unsigned conductor_;
    std::vector<BigInt> phi_;
    unsigned degree_ = 0;
    std::vector<std::vector<BigInt>> power_rows_;
};

/// Element of Q(zeta_N), stored as a rational coefficient vector of length
/// deg Phi_N in the power basis of zeta_N.  Values of conductor 1 (plain
/// rationals) mix freely with any other conductor; otherwise conductors of
/// operands must agree.
class CyclotomicNumber {
  public:
    explicit CyclotomicNumber(std::shared_ptr<const CyclotomicField> field)
        : field_(std::move(field)), c_(field_->degree()) {}

    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, Rational constant)
        : field_(std::move(field)), c_(field_->degree()) {
        c_[0] = std::move(constant);
    }

    CyclotomicNumber() : CyclotomicNumber(CyclotomicField::get(1)) {}

    static CyclotomicNumber from_rational(unsigned N, Rational q) {
        return CyclotomicNumber(CyclotomicField::get(N), std::move(q));
    }

    /// zeta_N^k
    static CyclotomicNumber zeta(unsigned N, long long k) {
        auto field = CyclotomicField::get(N);
        long long e = k % static_cast<long long>(N);
        if (e < 0) e += N;
        std::vector<Rational> p(static_cast<size_t>(e) + 1);
        p[static_cast<size_t>(e)] = Rational(1);
        CyclotomicNumber z(field);
        z.c_ = field->reduce(p);
        return z;
    }

    unsigned conductor() const { return field_->conductor(); }
    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    /// Throws unless the value lies in Q.
    Rational rational_part() const {
        if (!is_rational()) throw std::domain_error("CyclotomicNumber: value is irrational");
        return c_[0];
    }

    CyclotomicNumber operator-() const {
        CyclotomicNumber r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] += y.c_[j];
        return x;
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] -= y.c_[j];
        return x;
    }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        std::vector<Rational> prod(2 * x.c_.size());
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j].is_zero()) continue;
                prod[i + j] += x.c_[i] * y.c_[j];
            }
        }
        CyclotomicNumber r(x.field_);
        r.c_ = x.field_->reduce(prod);
        return r;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& s) {
        CyclotomicNumber r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    CyclotomicNumber inverse() const {
        if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
        detail::RatPoly a(c_.begin(), c_.end());
        detail::RatPoly phi;
        for (const auto& b : field_->minimal_polynomial()) phi.emplace_back(b);
        detail::RatPoly g, u;
        detail::ratpoly_half_ext_gcd(a, phi, g, u);
        if (g.size() != 1) throw std::logic_error("CyclotomicNumber: minimal polynomial not coprime");
        Rational ginv = g[0].inverse();
        u.resize(std::max<size_t>(u.size(), 1));
        for (auto& x : u) x *= ginv;
        CyclotomicNumber r(field_);
        r.c_ = field_->reduce(u);
        return r;
    }

    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a * b.inverse();
    }

    /// Complex conjugation, the field automorphism zeta -> zeta^{-1}.
    CyclotomicNumber conjugate() const {
        const unsigned N = field_->conductor();
        std::vector<Rational> p(N == 1 ? 1 : N);
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            size_t e = j == 0 ? 0 : N - j;
            p[e] += c_[j];
        }
        CyclotomicNumber r(field_);
        r.c_ = field_->reduce(p);
        return r;
    }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.conductor() == b.conductor()) return a.c_ == b.c_;
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        return false;
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    /// Total order usable as a container key (conductor, then coefficients).
    static int compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
        for (size_t j = 0; j < a.c_.size(); ++j) {
            if (a.c_[j] < b.c_[j]) return -1;
            if (b.c_[j] < a.c_[j]) return 1;
        }
        return 0;
    }

    std::string to_string() const {
        std::string s;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[j].to_display_string();
            if (j >= 1) {
                s += "*w";
                if (j > 1) s += "^" + std::to_string(j);
            }
        }
        return s.empty() ? "0" : s;
    }

  private:
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;

    static std::pair<CyclotomicNumber, CyclotomicNumber> align(const CyclotomicNumber& a,
                                                               const CyclotomicNumber& b) {
        if (a.conductor() == b.conductor()) return {a, b};
        if (a.conductor() == 1 && a.is_rational())
            return {CyclotomicNumber(b.field_, a.c_[0]), b};
        if (b.conductor() == 1 && b.is_rational())
            return {a, CyclotomicNumber(a.field_, b.c_[0])};
        throw std::invalid_argument("CyclotomicNumber: conductor mismatch");
    }
};

}  // namespace symquot

#endif
