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

#ifndef SYMQUOT_MONOMIAL_HPP
#define SYMQUOT_MONOMIAL_HPP

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquot {

/// Exponent vector over a fixed ordered coordinate list.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {
        for (int x : exps)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    explicit Monomial(size_t nvars) : exps(nvars, 0) {}

    size_t nvars() const { return exps.size(); }

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool is_one() const {
        for (int x : exps)
            if (x != 0) return false;
        return true;
    }

    /// Componentwise divisibility.
    bool divides(const Monomial& other) const {
        if (exps.size() != other.exps.size()) return false;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.exps.size() != b.exps.size()) throw std::invalid_argument("Monomial: arity mismatch");
        Monomial r(a.exps.size());
        for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
        return r;
    }

    /// Exact quotient; caller must check divisibility first.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (!b.divides(a)) throw std::invalid_argument("Monomial: not divisible");
        Monomial r(a.exps.size());
        for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }

    /// Renders with a caller-supplied variable namer.
    std::string to_string(const std::function<std::string(size_t)>& var_name) const {
        std::string s;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += var_name(i);
            if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Default coordinate names z1..zn, w1..wn for a doubled module.
inline std::string doubled_coordinate_name(size_t index, size_t n) {
    return index < n ? "z" + std::to_string(index + 1) : "w" + std::to_string(index - n + 1);
}

}  // namespace symquot

#endif
