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

#ifndef SYMQUOT_LAURENT_HPP
#define SYMQUOT_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "symquot/bigint.hpp"

namespace symquot {

/// Laurent polynomial in one variable with integer coefficients; zero
/// coefficients are never stored.  Characters of SL2-modules live here.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly constant(BigInt c) {
        LaurentPoly p;
        p.add(0, std::move(c));
        return p;
    }

    static LaurentPoly monomial(int exp, BigInt c) {
        LaurentPoly p;
        p.add(exp, std::move(c));
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }

    BigInt coeff(int exp) const {
        auto it = coeff_.find(exp);
        return it == coeff_.end() ? BigInt() : it->second;
    }

    void add(int exp, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeff_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }

    const std::map<int, BigInt>& terms() const { return coeff_; }

    int min_exp() const {
        if (coeff_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no support");
        return coeff_.begin()->first;
    }
    int max_exp() const {
        if (coeff_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no support");
        return coeff_.rbegin()->first;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeff_) r.add(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeff_) r.add(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_) r.add(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly scaled(const BigInt& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, v] : coeff_) r.coeff_.emplace(e, v * c);
        return r;
    }

    /// Substitution z -> z^k.  k must be nonzero.
    LaurentPoly substitute_power(int k) const {
        if (k == 0) throw std::invalid_argument("LaurentPoly: substitution exponent must be nonzero");
        LaurentPoly r;
        for (const auto& [e, c] : coeff_) r.add(e * k, c);
        return r;
    }

    /// c_k == c_{-k} for all k.
    bool is_symmetric() const {
        for (const auto& [e, c] : coeff_)
            if (coeff(-e) != c) return false;
        return true;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "z") const {
        if (coeff_.empty()) return "0";
        std::string s;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            if (it->first == 0) {
                s += it->second.to_string();
            } else {
                if (!it->second.is_one()) s += it->second.to_string() + "*";
                s += var;
                if (it->first != 1) s += "^" + std::to_string(it->first);
            }
        }
        return s;
    }

  private:
    std::map<int, BigInt> coeff_;
};

}  // namespace symquot

#endif
