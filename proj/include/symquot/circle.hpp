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

#ifndef SYMQUOT_CIRCLE_HPP
#define SYMQUOT_CIRCLE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symquot/graded_series.hpp"
#include "symquot/monomial.hpp"
#include "symquot/rational.hpp"

namespace symquot {

/// Weight vector of a diagonal circle action: nonzero integers with gcd 1.
/// Zero weights of the raw input are removed (their count is remembered) and
/// the common factor is divided out.
struct WeightVector {
    std::vector<long long> weights;
    int zeros_removed = 0;
    long long scale = 1;

    size_t n() const { return weights.size(); }

    long long max_abs() const {
        long long m = 0;
        for (long long a : weights) m = std::max(m, a < 0 ? -a : a);
        return m;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < weights.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(weights[i]);
        }
        return "(" + s + ")";
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.weights == b.weights;
    }
};

inline WeightVector normalize_weights(const std::vector<long long>& raw) {
    WeightVector w;
    long long g = 0;
    for (long long a : raw) {
        if (a == 0) {
            ++w.zeros_removed;
        } else {
            w.weights.push_back(a);
            g = std::gcd(g, a < 0 ? -a : a);
        }
    }
    if (g > 1)
        for (auto& a : w.weights) a /= g;
    w.scale = g == 0 ? 1 : g;
    return w;
}

/// Mixed signs: an open dense set of closed orbits exists.
inline bool is_stable(const WeightVector& w) {
    bool pos = false, neg = false;
    for (long long a : w.weights) (a > 0 ? pos : neg) = true;
    return pos && neg;
}

inline int positive_count(const WeightVector& w) {
    int c = 0;
    for (long long a : w.weights)
        if (a > 0) ++c;
    return c;
}
inline int negative_count(const WeightVector& w) { return static_cast<int>(w.n()) - positive_count(w); }

namespace detail {

inline std::vector<long long> prime_factors_of_weights(const WeightVector& w) {
    std::set<long long> primes;
    for (long long a : w.weights) {
        long long v = a < 0 ? -a : a;
        for (long long p = 2; p * p <= v; ++p) {
            if (v % p == 0) {
                primes.insert(p);
                while (v % p == 0) v /= p;
            }
        }
        if (v > 1) primes.insert(v);
    }
    return {primes.begin(), primes.end()};
}

}  // namespace detail

/// Complex codimension of the complement of the principal locus (trivial
/// isotropy on a closed orbit).  The non-principal points are the null cone,
/// of codimension min(#positive, #negative), together with the fixed
/// subspaces of the cyclic subgroups of prime order p, which are the
/// coordinate subspaces spanned by the coordinates whose weight p divides.
/// The vector is k-principal iff the result is >= k.
inline int principal_codim(const WeightVector& w) {
    if (!is_stable(w)) throw std::invalid_argument("principal_codim: weight vector is not stable");
    int codim = std::min(positive_count(w), negative_count(w));
    for (long long p : detail::prime_factors_of_weights(w)) {
        int not_divisible = 0;
        for (long long a : w.weights)
            if (a % p != 0) ++not_divisible;
        codim = std::min(codim, not_divisible);
    }
    return codim;
}

/// k-modularity for a normalized circle weight vector.  The only stratum of
/// positive-dimensional isotropy is the origin (all weights nonzero), of
/// codimension n, so the condition reduces to finite principal isotropy
/// (equivalent to stability here) plus n >= k + 1.
inline bool is_k_modular(const WeightVector& w, int k) {
    if (!is_stable(w)) return false;
    return static_cast<int>(w.n()) >= k + 1;
}

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    Rational norm_squared() const { return re * re + im * im; }
};

/// (1/2) sum_i a_i |z_i|^2 evaluated exactly.
inline Rational real_moment_value(const WeightVector& w, const std::vector<GaussianRational>& z) {
    if (z.size() != w.n()) throw std::invalid_argument("real_moment_value: dimension mismatch");
    Rational acc;
    for (size_t i = 0; i < z.size(); ++i) acc += Rational(w.weights[i]) * z[i].norm_squared();
    return acc * Rational(BigInt(1), BigInt(2));
}

/// The terms a_i z_i w_i of the complexified moment map, as monomial data on
/// the 2n coordinates (z_1..z_n, w_1..w_n).
inline std::vector<std::pair<long long, Monomial>> complex_moment_monomials(const WeightVector& w) {
    std::vector<std::pair<long long, Monomial>> terms;
    const size_t n = w.n();
    for (size_t i = 0; i < n; ++i) {
        Monomial m(2 * n);
        m.exps[i] = 1;
        m.exps[n + i] = 1;
        terms.emplace_back(w.weights[i], m);
    }
    return terms;
}

namespace detail {

/// All exponent vectors in n variables of total degree <= cap, grouped by
/// (degree, weighted sum).
struct WeightedVectors {
    // key: weighted sum; per degree
    std::vector<std::map<long long, std::vector<std::vector<int>>>> by_degree;

    static WeightedVectors enumerate(const std::vector<long long>& weights, int cap) {
        WeightedVectors out;
        out.by_degree.resize(static_cast<size_t>(cap) + 1);
        std::vector<int> current(weights.size(), 0);
        recurse(weights, cap, 0, 0, 0, current, out);
        return out;
    }

  private:
    static void recurse(const std::vector<long long>& weights, int cap, size_t idx, int degree,
                        long long sum, std::vector<int>& current, WeightedVectors& out) {
        if (idx == weights.size()) {
            out.by_degree[static_cast<size_t>(degree)][sum].push_back(current);
            return;
        }
        for (int e = 0; degree + e <= cap; ++e) {
            current[idx] = e;
            recurse(weights, cap, idx + 1, degree + e, sum + e * weights[idx], current, out);
        }
        current[idx] = 0;
    }
};

/// L(d, s) = number of exponent vectors of degree d with weighted sum s,
/// as a dense table with offset indexing.
struct WeightedCounts {
    int cap;
    long long span;  // |s| <= span
    std::vector<std::vector<BigInt>> table;  // [degree][s + span]

    static WeightedCounts build(const std::vector<long long>& weights, int cap) {
        long long amax = 1;
        for (long long a : weights) amax = std::max(amax, a < 0 ? -a : a);
        WeightedCounts c;
        c.cap = cap;
        c.span = amax * cap;
        c.table.assign(static_cast<size_t>(cap) + 1,
                       std::vector<BigInt>(static_cast<size_t>(2 * c.span + 1)));
        c.table[0][static_cast<size_t>(c.span)] = BigInt(1);
        for (long long a : weights) {
            auto next = c.table;
            for (int d = 0; d <= cap; ++d)
                for (long long s = -c.span; s <= c.span; ++s) {
                    const BigInt& base = c.table[static_cast<size_t>(d)][static_cast<size_t>(s + c.span)];
                    if (base.is_zero()) continue;
                    for (int e = 1; d + e <= cap; ++e) {
                        long long s2 = s + e * a;
                        if (s2 < -c.span || s2 > c.span) break;  // unreachable within degree cap
                        next[static_cast<size_t>(d + e)][static_cast<size_t>(s2 + c.span)] += base;
                    }
                }
            c.table = std::move(next);
        }
        return c;
    }

    const BigInt& at(int degree, long long sum) const {
        static const BigInt zero;
        if (degree < 0 || degree > cap || sum < -span || sum > span) return zero;
        return table[static_cast<size_t>(degree)][static_cast<size_t>(sum + span)];
    }
};

}  // namespace detail

/// Dimension of the degree-m part of the invariant ring of V + V*: pairs
/// (alpha, beta) with |alpha| + |beta| = m and equal weighted sums.
inline BigInt circle_invariant_dim(const WeightVector& w, int m) {
    if (m < 0) return BigInt();
    detail::WeightedCounts counts = detail::WeightedCounts::build(w.weights, m);
    BigInt total;
    for (int dz = 0; dz <= m; ++dz) {
        int dw = m - dz;
        long long reach = 0;
        for (long long a : w.weights) reach = std::max(reach, a < 0 ? -a : a);
        reach *= std::max(dz, dw);
        for (long long s = -reach; s <= reach; ++s) {
            const BigInt& f = counts.at(dz, s);
            if (f.is_zero()) continue;
            total += f * counts.at(dw, s);
        }
    }
    return total;
}

/// Hilbert series of the invariant ring of V + V* modulo the complexified
/// moment map, for stable normalized weights: coefficient of t^m is
/// L(m) - L(m-2), the moment quadric being an invariant nonzerodivisor.
/// One-signed or empty weight vectors have a point quotient: the series is
/// the constant 1.
inline GradedSeries quotient_hilbert_series_circle(const WeightVector& w, int order) {
    if (!is_stable(w)) return GradedSeries::one(order);
    detail::WeightedCounts counts = detail::WeightedCounts::build(w.weights, order);
    std::vector<BigInt> L(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        BigInt total;
        for (int dz = 0; dz <= m; ++dz) {
            int dw = m - dz;
            for (long long s = -counts.span; s <= counts.span; ++s) {
                const BigInt& f = counts.at(dz, s);
                if (f.is_zero()) continue;
                total += f * counts.at(dw, s);
            }
        }
        L[static_cast<size_t>(m)] = total;
    }
    GradedSeries series(order);
    for (int m = 0; m <= order; ++m) {
        BigInt c = L[static_cast<size_t>(m)];
        if (m >= 2) c -= L[static_cast<size_t>(m - 2)];
        series.set(m, Rational(c));
    }
    return series;
}

/// Truncated Hilbert basis of the monoid of invariant monomials on V + V*.
struct HilbertBasisResult {
    std::vector<Monomial> generators;  // sorted by degree, then lexicographically
    int cap = 0;
    bool complete = false;  // all invariant monomials in degrees cap+1, cap+2 factor
};

namespace detail {

/// All weight-0 exponent vectors on (z, w) of each degree 1..cap.
inline std::vector<std::vector<Monomial>> invariant_monomials_by_degree(const WeightVector& w, int cap) {
    const size_t n = w.n();
    std::vector<std::vector<Monomial>> out(static_cast<size_t>(cap) + 1);
    if (n == 0) return out;
    WeightedVectors vecs = WeightedVectors::enumerate(w.weights, cap);
    for (int dz = 0; dz <= cap; ++dz) {
        for (const auto& [sum, alphas] : vecs.by_degree[static_cast<size_t>(dz)]) {
            for (int dw = 0; dz + dw <= cap; ++dw) {
                auto it = vecs.by_degree[static_cast<size_t>(dw)].find(sum);
                if (it == vecs.by_degree[static_cast<size_t>(dw)].end()) continue;
                for (const auto& alpha : alphas)
                    for (const auto& beta : it->second) {
                        if (dz + dw == 0) continue;
                        Monomial m(2 * n);
                        for (size_t i = 0; i < n; ++i) {
                            m.exps[i] = alpha[i];
                            m.exps[n + i] = beta[i];
                        }
                        out[static_cast<size_t>(dz + dw)].push_back(m);
                    }
            }
        }
    }
    for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
    return out;
}

}  // namespace detail

/// Weight-0 monomials of degree <= cap that are not products of two smaller
/// weight-0 monomials.  The completeness flag records that all invariant
/// monomials of degrees cap+1 and cap+2 factor over the returned set.
inline HilbertBasisResult invariant_hilbert_basis(const WeightVector& w, int cap) {
    if (cap < 1) throw std::invalid_argument("invariant_hilbert_basis: cap must be >= 1");
    HilbertBasisResult result;
    result.cap = cap;
    auto by_degree = detail::invariant_monomials_by_degree(w, cap + 2);
    std::vector<Monomial> basis;
    bool extra_degrees_factor = true;
    for (int d = 1; d <= cap + 2; ++d) {
        for (const auto& m : by_degree[static_cast<size_t>(d)]) {
            bool reducible = false;
            for (const auto& g : basis) {
                if (g.degree() < d && g.divides(m)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) {
                if (d <= cap)
                    basis.push_back(m);
                else
                    extra_degrees_factor = false;
            }
        }
    }
    result.generators = std::move(basis);
    result.complete = extra_degrees_factor;
    return result;
}

/// Degree -> count map of a minimal generating set, with a completeness flag.
struct GeneratorDegrees {
    std::map<int, int> counts;
    bool complete = false;

    friend bool operator==(const GeneratorDegrees& a, const GeneratorDegrees& b) {
        return a.counts == b.counts;
    }
};

/// Minimal-generator degrees of the quotient ring of a stable circle module.
/// In degree >= 3 the new generators are exactly the irreducible invariant
/// monomials: the ideal slice J*Inv_{m-2} lies in the span of the factorable
/// monomials, multiplication by J is injective, and the count telescopes to
/// L(m) - #factorable(m).  In degree 2 there are no degree-1 invariants and
/// the moment quadric itself absorbs one generator: L(2) - 1.
inline GeneratorDegrees quotient_generator_degrees_circle(const WeightVector& w, int cap) {
    if (cap < 2) throw std::invalid_argument("quotient_generator_degrees_circle: cap must be >= 2");
    GeneratorDegrees out;
    if (!is_stable(w)) {  // point quotient: no generators
        out.complete = true;
        return out;
    }
    HilbertBasisResult basis = invariant_hilbert_basis(w, cap);
    for (const auto& g : basis.generators) out.counts[g.degree()]++;
    auto deg2 = out.counts.find(2);
    if (deg2 == out.counts.end()) throw std::logic_error("stable circle module without degree-2 invariants");
    if (--deg2->second == 0) out.counts.erase(deg2);
    out.complete = basis.complete;
    return out;
}

}  // namespace symquot

#endif
