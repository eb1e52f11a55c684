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

#ifndef SYMQUOT_SU2_HPP
#define SYMQUOT_SU2_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "symquot/graded_series.hpp"
#include "symquot/laurent.hpp"

namespace symquot {

/// Unitary SU2-module V = R_{d_1} + R_{d_2} + ... given by the multiset of
/// positive degrees, stored sorted descending.  R_d is the irreducible module
/// of binary forms of degree d, of dimension d+1.
struct SU2Module {
    std::vector<int> degrees;

    explicit SU2Module(std::vector<int> ds) : degrees(std::move(ds)) {
        for (int d : degrees)
            if (d < 1) throw std::invalid_argument("SU2Module: degrees must be >= 1");
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    }

    bool empty() const { return degrees.empty(); }

    int complex_dim() const {
        int n = 0;
        for (int d : degrees) n += d + 1;
        return n;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += "+";
            s += "R" + std::to_string(degrees[i]);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const SU2Module& a, const SU2Module& b) { return a.degrees == b.degrees; }
};

/// Character of R_d restricted to the maximal torus: z^d + z^{d-2} + ... + z^{-d}.
inline LaurentPoly character_Rd(int d) {
    if (d < 0) throw std::invalid_argument("character_Rd: degree must be >= 0");
    LaurentPoly chi;
    for (int j = 0; j <= d; ++j) chi.add(d - 2 * j, BigInt(1));
    return chi;
}

inline LaurentPoly character_of_module(const SU2Module& v) {
    LaurentPoly chi;
    for (int d : v.degrees) chi = chi + character_Rd(d);
    return chi;
}

/// Multiplicity of the trivial summand in a module with the given (symmetric)
/// torus character: the difference of the z^0 and z^2 coefficients.
inline BigInt invariant_dim(const LaurentPoly& chi) {
    if (!chi.is_symmetric()) throw std::invalid_argument("invariant_dim: character is not symmetric");
    return chi.coeff(0) - chi.coeff(2);
}

/// Character of Sym^m of a module with character chi, by the Newton
/// recurrence m*h_m = sum_{k=1..m} p_k h_{m-k} with p_k(z) = chi(z^k).
/// All divisions must be exact; a failed division signals a bug.
inline LaurentPoly sym_power_character(const LaurentPoly& chi, int m) {
    if (m < 0) throw std::invalid_argument("sym_power_character: negative power");
    std::vector<LaurentPoly> h(static_cast<size_t>(m) + 1);
    h[0] = LaurentPoly::constant(BigInt(1));
    std::vector<LaurentPoly> p(static_cast<size_t>(m) + 1);
    for (int k = 1; k <= m; ++k) p[static_cast<size_t>(k)] = chi.substitute_power(k);
    for (int j = 1; j <= m; ++j) {
        LaurentPoly acc;
        for (int k = 1; k <= j; ++k) acc = acc + p[static_cast<size_t>(k)] * h[static_cast<size_t>(j - k)];
        LaurentPoly hj;
        for (const auto& [e, c] : acc.terms()) {
            BigInt q, r;
            BigInt::divmod(c, BigInt(j), q, r);
            if (!r.is_zero())
                throw std::logic_error("sym_power_character: non-exact division in Newton recurrence");
            hj.add(e, q);
        }
        h[static_cast<size_t>(j)] = std::move(hj);
    }
    return h[static_cast<size_t>(m)];
}

namespace detail {

/// Number of partitions of s into at most m parts, each part <= d.
inline long long bounded_partitions(int s, int m, int d) {
    if (s < 0) return 0;
    if (s == 0) return 1;
    if (m == 0 || d == 0) return 0;
    // dp[j][t]: partitions of t into exactly j parts drawn from sizes
    // processed so far
    std::vector<std::vector<long long>> dp(static_cast<size_t>(m) + 1,
                                           std::vector<long long>(static_cast<size_t>(s) + 1, 0));
    dp[0][0] = 1;
    for (int size = 1; size <= d; ++size) {
        for (int j = 1; j <= m; ++j)
            for (int t = size; t <= s; ++t)
                dp[static_cast<size_t>(j)][static_cast<size_t>(t)] +=
                    dp[static_cast<size_t>(j - 1)][static_cast<size_t>(t - size)];
    }
    long long total = 0;
    for (int j = 0; j <= m; ++j) total += dp[static_cast<size_t>(j)][static_cast<size_t>(s)];
    return total;
}

}  // namespace detail

/// dim of the degree-m invariants of binary forms of degree d, by the
/// partition-difference rule: 0 when dm is odd, else
/// P(dm/2; m, d) - P(dm/2 - 1; m, d) with P counting partitions into at most
/// m parts each <= d.  Serves as an oracle independent of character
/// arithmetic.
inline long long cayley_sylvester(int d, int m) {
    if (d < 0 || m < 0) throw std::invalid_argument("cayley_sylvester: negative arguments");
    long long dm = static_cast<long long>(d) * m;
    if (dm % 2 != 0) return 0;
    int half = static_cast<int>(dm / 2);
    return detail::bounded_partitions(half, m, d) - detail::bounded_partitions(half - 1, m, d);
}

/// Not 1-large: R1, 2R1, R2.  For these the quadric components of the
/// complexified moment map do not cut out the right ideal and the Koszul
/// series below must not be used.
inline bool su2_is_one_large(const SU2Module& v) {
    const auto& d = v.degrees;
    if (d.empty()) return false;
    if (d == std::vector<int>{1} || d == std::vector<int>{1, 1} || d == std::vector<int>{2}) return false;
    return true;
}

/// Hilbert series of the invariant ring of V + V* modulo the three moment-map
/// quadrics, for 1-large V, via the Koszul resolution of the quadrics (they
/// form a regular sequence in that case).  The quadrics transform in the
/// adjoint module R_2; Lambda^0 and Lambda^3 of the adjoint are trivial,
/// Lambda^1 and Lambda^2 are again R_2.
inline GradedSeries quotient_hilbert_series_su2(const SU2Module& v, int order) {
    if (!su2_is_one_large(v))
        throw std::domain_error(
            "quotient_hilbert_series_su2: module is not 1-large; use the table-backed path");
    LaurentPoly chi_vv = character_of_module(v);
    chi_vv = chi_vv + chi_vv;  // V + V*, each R_d being self-dual
    const LaurentPoly chi_adj = character_Rd(2);
    std::vector<BigInt> n0(static_cast<size_t>(order) + 1), n1(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
        LaurentPoly sym = sym_power_character(chi_vv, j);
        n0[static_cast<size_t>(j)] = invariant_dim(sym);
        n1[static_cast<size_t>(j)] = invariant_dim(sym * chi_adj);
    }
    GradedSeries s(order);
    for (int m = 0; m <= order; ++m) {
        BigInt c = n0[static_cast<size_t>(m)];
        if (m >= 2) c -= n1[static_cast<size_t>(m - 2)];
        if (m >= 4) c += n1[static_cast<size_t>(m - 4)];
        if (m >= 6) c -= n0[static_cast<size_t>(m - 6)];
        s.set(m, Rational(c));
    }
    return s;
}

enum class SU2CandidateClass {
    OnList,    // R1, 2R1, R2, 2R2, R2+R1, R3, R4: not 2-principal
    ThreeR1,   // 3R1: only 1-large, but still 2-principal
    OffList,   // everything else: 2-large
};

/// Membership in the finite list of SU2-modules that fail to be 2-principal.
inline SU2CandidateClass non_2principal_membership(const SU2Module& v) {
    if (v.degrees.empty()) throw std::invalid_argument("non_2principal_membership: empty module");
    static const std::vector<std::vector<int>> on_list = {
        {1}, {1, 1}, {2}, {2, 2}, {2, 1}, {3}, {4},
    };
    for (const auto& entry : on_list)
        if (v.degrees == entry) return SU2CandidateClass::OnList;
    if (v.degrees == std::vector<int>{1, 1, 1}) return SU2CandidateClass::ThreeR1;
    return SU2CandidateClass::OffList;
}

}  // namespace symquot

#endif
