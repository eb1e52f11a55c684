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

#ifndef SYMQUOT_GRADED_SERIES_HPP
#define SYMQUOT_GRADED_SERIES_HPP

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symquot/rational.hpp"

namespace symquot {

/// Truncated power series with exact rational coefficients, indexed by degree
/// 0..order.  Every Hilbert and Molien series in the library is one of these;
/// no closed-form reconstruction is attempted, all comparisons are finite.
class GradedSeries {
  public:
    explicit GradedSeries(int order) : coeff_(check_order(order) + 1) {}

    GradedSeries(std::initializer_list<Rational> cs) : coeff_(cs) {
        if (coeff_.empty()) throw std::invalid_argument("GradedSeries: empty coefficient list");
    }

    static GradedSeries one(int order) {
        GradedSeries s(order);
        s.coeff_[0] = Rational(1);
        return s;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& at(int m) const {
        if (m < 0 || m > order()) throw std::out_of_range("GradedSeries: degree out of range");
        return coeff_[static_cast<size_t>(m)];
    }

    void set(int m, Rational v) {
        if (m < 0 || m > order()) throw std::out_of_range("GradedSeries: degree out of range");
        coeff_[static_cast<size_t>(m)] = std::move(v);
    }

    const std::vector<Rational>& coefficients() const { return coeff_; }

    GradedSeries truncated(int new_order) const {
        if (new_order > order()) throw std::invalid_argument("GradedSeries: cannot extend by truncation");
        GradedSeries s(new_order);
        for (int m = 0; m <= new_order; ++m) s.coeff_[static_cast<size_t>(m)] = coeff_[static_cast<size_t>(m)];
        return s;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

    /// First degree where the two series differ, or -1 if equal to the common
    /// truncation order.
    static int first_difference(const GradedSeries& a, const GradedSeries& b) {
        int n = std::min(a.order(), b.order());
        for (int m = 0; m <= n; ++m)
            if (a.at(m) != b.at(m)) return m;
        return -1;
    }

    std::string to_display_string() const {
        std::ostringstream os;
        for (int m = 0; m <= order(); ++m) {
            if (m) os << ", ";
            os << coeff_[static_cast<size_t>(m)].to_display_string();
        }
        return os.str();
    }

  private:
    std::vector<Rational> coeff_;

    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("GradedSeries: negative order");
        return order;
    }
};

/// Cauchy product truncated to the common order.  Throws on order mismatch.
inline GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: truncation order mismatch");
    GradedSeries r(a.order());
    for (int m = 0; m <= a.order(); ++m) {
        Rational acc;
        for (int k = 0; k <= m; ++k) acc += a.at(k) * b.at(m - k);
        r.set(m, acc);
    }
    return r;
}

/// One factor (1 - t^d)^multiplicity of a denominator.
struct DenomFactor {
    int degree;
    int multiplicity;
};

/// Expands numer(t) / prod (1 - t^d)^m as a power series to the given order.
/// Multiplication by 1/(1 - t^d) is the in-place prefix recurrence
/// c[i] += c[i-d].  A factor with d == 0 makes the denominator vanish at 0.
inline GradedSeries rational_fn_expand(const std::vector<BigInt>& numer,
                                       const std::vector<DenomFactor>& denom, int order) {
    for (const auto& f : denom) {
        if (f.degree == 0 && f.multiplicity > 0)
            throw std::invalid_argument("rational_fn_expand: denominator has zero constant term");
        if (f.degree < 0 || f.multiplicity < 0)
            throw std::invalid_argument("rational_fn_expand: bad denominator factor");
    }
    GradedSeries s(order);
    for (int m = 0; m <= order && m < static_cast<int>(numer.size()); ++m)
        s.set(m, Rational(numer[static_cast<size_t>(m)]));
    for (const auto& f : denom) {
        for (int rep = 0; rep < f.multiplicity; ++rep) {
            for (int i = f.degree; i <= order; ++i) s.set(i, s.at(i) + s.at(i - f.degree));
        }
    }
    return s;
}

}  // namespace symquot

#endif
