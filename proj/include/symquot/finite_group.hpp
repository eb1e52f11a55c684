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

#ifndef SYMQUOT_FINITE_GROUP_HPP
#define SYMQUOT_FINITE_GROUP_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symquot/circle.hpp"
#include "symquot/cyc_matrix.hpp"
#include "symquot/graded_series.hpp"

namespace symquot {

/// A finite unitary matrix group given by its full element list, closed under
/// products and inverses, with the identity first and the remaining elements
/// in breadth-first order from the generators.
struct MatrixGroup {
    std::shared_ptr<const CyclotomicField> field;
    unsigned dim = 0;
    std::vector<CycMatrix> generators;
    std::vector<CycMatrix> elements;
    std::string label;

    size_t order() const { return elements.size(); }
};

/// Breadth-first closure of unitary generators over a common conductor.
inline MatrixGroup close_group(std::vector<CycMatrix> generators, size_t cap = 1000,
                               std::string label = "") {
    if (generators.empty()) throw std::invalid_argument("close_group: no generators");
    const unsigned dim = generators[0].dim();
    auto field = generators[0].field();
    for (const auto& g : generators) {
        if (g.dim() != dim || g.field()->conductor() != field->conductor())
            throw std::invalid_argument("close_group: generators of mixed dimension or conductor");
        if (!g.is_unitary()) throw std::invalid_argument("close_group: non-unitary generator");
    }
    MatrixGroup group;
    group.field = field;
    group.dim = dim;
    group.generators = generators;
    group.label = std::move(label);

    CycMatrix id = CycMatrix::identity(field, dim);
    std::set<CycMatrix> seen{id};
    std::deque<CycMatrix> queue{id};
    group.elements.push_back(id);
    while (!queue.empty()) {
        CycMatrix current = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            CycMatrix next = current * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::runtime_error("close_group: order cap exceeded");
                group.elements.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return group;
}

/// The block action h -> diag(rho(h), conj(rho(h))) on W + W*; for unitary
/// rho the second block is (rho(h)^{-1})^t.
inline MatrixGroup doubled_action(const MatrixGroup& H) {
    MatrixGroup d;
    d.field = H.field;
    d.dim = 2 * H.dim;
    d.label = H.label.empty() ? "" : H.label + " doubled";
    for (const auto& g : H.generators) d.generators.push_back(CycMatrix::block_diag(g, g.conjugate()));
    for (const auto& g : H.elements) d.elements.push_back(CycMatrix::block_diag(g, g.conjugate()));
    return d;
}

// ---------------------------------------------------------------------------
// presets

/// Cyclic group of order m acting diagonally with the given weights.
inline MatrixGroup cyclic_group(unsigned m, const std::vector<long long>& weights = {1}) {
    if (m == 0) throw std::invalid_argument("cyclic_group: order must be positive");
    auto field = CyclotomicField::get(m);
    CycMatrix gen(field, static_cast<unsigned>(weights.size()));
    for (unsigned i = 0; i < weights.size(); ++i)
        gen.at(i, i) = CyclotomicNumber::zeta(m, weights[static_cast<size_t>(i)]);
    std::string label = "Z_" + std::to_string(m);
    return close_group({gen}, static_cast<size_t>(m) + 1, label);
}

/// {+1, -1} acting by the scalar -1 on C^n.
inline MatrixGroup plus_minus_one(unsigned n) {
    auto field = CyclotomicField::get(1);
    CycMatrix minus(field, n);
    for (unsigned i = 0; i < n; ++i) minus.at(i, i) = CyclotomicNumber::from_rational(1, Rational(-1));
    return close_group({minus}, 3, "Z_2");
}

/// The symmetric group S_3 in its two-dimensional unitary form over Q(zeta_3):
/// diag(w, w^2) and the coordinate swap.
inline MatrixGroup symmetric3_standard() {
    auto field = CyclotomicField::get(3);
    CycMatrix rot(field, 2);
    rot.at(0, 0) = CyclotomicNumber::zeta(3, 1);
    rot.at(1, 1) = CyclotomicNumber::zeta(3, 2);
    CycMatrix swap(field, 2);
    swap.at(0, 1) = CyclotomicNumber::from_rational(3, Rational(1));
    swap.at(1, 0) = CyclotomicNumber::from_rational(3, Rational(1));
    return close_group({rot, swap}, 7, "S_3");
}

// ---------------------------------------------------------------------------
// Molien series

namespace detail {

/// det(1 - t M) as a degree-dim polynomial via the Newton identities
/// k e_k = sum_{i<=k} (-1)^{i-1} e_{k-i} p_i on the traces p_i = tr(M^i).
inline std::vector<CyclotomicNumber> det_one_minus_t(const CycMatrix& M) {
    const unsigned n = M.dim();
    std::vector<CyclotomicNumber> p(n + 1, CyclotomicNumber(M.field()));
    CycMatrix power = M;
    for (unsigned k = 1; k <= n; ++k) {
        p[k] = power.trace();
        if (k < n) power = power * M;
    }
    std::vector<CyclotomicNumber> e(n + 1, CyclotomicNumber(M.field()));
    e[0] = CyclotomicNumber(M.field(), Rational(1));
    for (unsigned k = 1; k <= n; ++k) {
        CyclotomicNumber acc(M.field());
        int sign = 1;
        for (unsigned i = 1; i <= k; ++i) {
            CyclotomicNumber term = e[k - i] * p[i];
            acc += sign > 0 ? term : -term;
            sign = -sign;
        }
        e[k] = acc * Rational(BigInt(1), BigInt(k));
    }
    // det(1 - tM) = sum (-1)^k e_k t^k
    for (unsigned k = 1; k <= n; k += 2) e[k] = -e[k];
    return e;
}

/// 1/q(t) for a polynomial with q(0) = 1, to the given order.
inline std::vector<CyclotomicNumber> invert_poly_series(const std::vector<CyclotomicNumber>& q,
                                                        int order,
                                                        const std::shared_ptr<const CyclotomicField>& field) {
    std::vector<CyclotomicNumber> inv(static_cast<size_t>(order) + 1, CyclotomicNumber(field));
    inv[0] = CyclotomicNumber(field, Rational(1));
    for (int m = 1; m <= order; ++m) {
        CyclotomicNumber acc(field);
        for (int k = 1; k <= m && k < static_cast<int>(q.size()); ++k) {
            if (q[static_cast<size_t>(k)].is_zero()) continue;
            acc += q[static_cast<size_t>(k)] * inv[static_cast<size_t>(m - k)];
        }
        inv[static_cast<size_t>(m)] = -acc;
    }
    return inv;
}

}  // namespace detail

/// Molien series (1/|H|) sum_h 1/det(1 - t h).  The average of the cyclotomic
/// per-element series must be rational; anything else signals a bug.
inline GradedSeries molien_series(const MatrixGroup& H, int order) {
    if (H.elements.empty()) throw std::invalid_argument("molien_series: group not closed");
    std::vector<CyclotomicNumber> sum(static_cast<size_t>(order) + 1, CyclotomicNumber(H.field));
    for (const auto& h : H.elements) {
        auto det = detail::det_one_minus_t(h);
        auto inv = detail::invert_poly_series(det, order, H.field);
        for (int m = 0; m <= order; ++m) sum[static_cast<size_t>(m)] += inv[static_cast<size_t>(m)];
    }
    const Rational inv_order(BigInt(1), BigInt(static_cast<long long>(H.order())));
    GradedSeries s(order);
    for (int m = 0; m <= order; ++m) {
        CyclotomicNumber avg = sum[static_cast<size_t>(m)] * inv_order;
        if (!avg.is_rational())
            throw std::logic_error("molien_series: non-rational averaged coefficient");
        s.set(m, avg.rational_part());
    }
    return s;
}

/// dim of the quadratic invariants of H on W: (1/|H|) sum (tr(h)^2 + tr(h^2))/2.
inline long long sym2_invariant_dim(const MatrixGroup& H) {
    CyclotomicNumber acc(H.field);
    for (const auto& h : H.elements) {
        CyclotomicNumber t = h.trace();
        acc += t * t + (h * h).trace();
    }
    Rational value =
        (acc * Rational(BigInt(1), BigInt(2 * static_cast<long long>(H.order())))).rational_part();
    if (!value.is_integer()) throw std::logic_error("sym2_invariant_dim: non-integral average");
    return value.as_integer().to_int64();
}

// ---------------------------------------------------------------------------
// quadratic invariants of real decompositions

/// A real H-module written as a sum of pairwise nonisomorphic real
/// irreducibles with multiplicities.
struct RealDecomposition {
    struct Summand {
        int multiplicity;
        int real_dim;
        bool absolutely_irreducible = true;
    };
    std::vector<Summand> summands;

    int real_dim() const {
        int d = 0;
        for (const auto& s : summands) d += s.multiplicity * s.real_dim;
        return d;
    }
};

/// Number of linearly independent quadratic invariants, sum of C(mu_j + 1, 2)
/// over the summands.  Only valid for absolutely irreducible real summands;
/// complex- or quaternionic-type summands are rejected rather than guessed.
inline long long quadratic_invariant_count(const RealDecomposition& decomp) {
    long long total = 0;
    for (const auto& s : decomp.summands) {
        if (!s.absolutely_irreducible)
            throw std::invalid_argument(
                "quadratic_invariant_count: unsupported non-absolutely-irreducible summand");
        if (s.multiplicity < 1 || s.real_dim < 1)
            throw std::invalid_argument("quadratic_invariant_count: malformed decomposition");
        total += static_cast<long long>(s.multiplicity + 1) * s.multiplicity / 2;
    }
    return total;
}

/// Abstract decomposition pattern: multiset of (multiplicity, real dimension)
/// pairs of pairwise nonisomorphic real irreducibles.
struct DecompPattern {
    std::vector<std::pair<int, int>> classes;  // nonincreasing (mu, dim)

    long long quadratic_count() const {
        long long total = 0;
        for (auto [mu, d] : classes) total += static_cast<long long>(mu + 1) * mu / 2;
        return total;
    }

    /// The realification of a unitary module contains every 1-dimensional
    /// real class with even multiplicity (real-valued characters realify in
    /// pairs); an odd 1-dimensional multiplicity witnesses non-unitarity.
    bool has_odd_one_dim_class() const {
        for (auto [mu, d] : classes)
            if (d == 1 && mu % 2 == 1) return true;
        return false;
    }
};

namespace detail {

inline void enumerate_patterns_rec(int remaining, std::pair<int, int> max_class,
                                   std::vector<std::pair<int, int>>& current,
                                   std::vector<DecompPattern>& out) {
    if (remaining == 0) {
        out.push_back(DecompPattern{current});
        return;
    }
    for (int mu = std::min(max_class.first, remaining); mu >= 1; --mu)
        for (int d = remaining / mu; d >= 1; --d) {
            if (std::make_pair(mu, d) > max_class) continue;
            if (mu * d > remaining) continue;
            current.emplace_back(mu, d);
            enumerate_patterns_rec(remaining - mu * d, {mu, d}, current, out);
            current.pop_back();
        }
}

}  // namespace detail

/// All decomposition patterns of a real module of the given dimension.
inline std::vector<DecompPattern> enumerate_decomposition_patterns(int real_dim) {
    std::vector<DecompPattern> out;
    std::vector<std::pair<int, int>> current;
    detail::enumerate_patterns_rec(real_dim, {real_dim, real_dim}, current, out);
    return out;
}

// ---------------------------------------------------------------------------
// invariant polynomials by Reynolds averaging and exact linear algebra

namespace detail {

using SparsePoly = std::map<std::vector<int>, CyclotomicNumber>;

inline void sparse_add(SparsePoly& p, const std::vector<int>& mono, const CyclotomicNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(ma.size());
            for (size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
            sparse_add(r, m, ca * cb);
        }
    return r;
}

/// f(M x) for a monomial f = x^alpha.
inline SparsePoly substitute_monomial(const CycMatrix& M, const std::vector<int>& alpha) {
    const unsigned n = M.dim();
    SparsePoly result{{std::vector<int>(n, 0), CyclotomicNumber(M.field(), Rational(1))}};
    for (unsigned i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        SparsePoly linear;
        for (unsigned j = 0; j < n; ++j) {
            if (M.at(i, j).is_zero()) continue;
            std::vector<int> mono(n, 0);
            mono[j] = 1;
            linear.emplace(std::move(mono), M.at(i, j));
        }
        for (int rep = 0; rep < alpha[i]; ++rep) result = sparse_mul(result, linear);
    }
    return result;
}

/// Lexicographically ordered exponent vectors of the given total degree.
inline std::vector<std::vector<int>> monomials_of_degree(unsigned nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(nvars, 0);
    auto rec = [&](auto&& self, unsigned idx, int left) -> void {
        if (idx + 1 == nvars) {
            current[idx] = left;
            out.push_back(current);
            return;
        }
        for (int e = left; e >= 0; --e) {
            current[idx] = e;
            self(self, idx + 1, left - e);
        }
        current[idx] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

/// Row-reduction workspace over the cyclotomic field with deterministic
/// pivoting in column order.
struct RowReducer {
    std::vector<std::vector<CyclotomicNumber>> rows;  // reduced rows
    std::vector<size_t> pivots;                       // pivot column per row

    /// Reduces v against the basis; if a new pivot remains, inserts and
    /// returns true.
    bool insert(std::vector<CyclotomicNumber> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const CyclotomicNumber& lead = v[pivots[r]];
            if (lead.is_zero()) continue;
            CyclotomicNumber f = lead;  // basis rows are monic at their pivot
            for (size_t c = 0; c < v.size(); ++c)
                if (!rows[r][c].is_zero()) v[c] -= f * rows[r][c];
        }
        size_t pivot = v.size();
        for (size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) {
                pivot = c;
                break;
            }
        if (pivot == v.size()) return false;
        CyclotomicNumber inv = v[pivot].inverse();
        for (auto& x : v) x *= inv;
        // back-substitute to keep earlier rows fully reduced
        for (size_t r = 0; r < rows.size(); ++r) {
            const CyclotomicNumber& f = rows[r][pivot];
            if (f.is_zero()) continue;
            CyclotomicNumber factor = f;
            for (size_t c = 0; c < v.size(); ++c)
                if (!v[c].is_zero()) rows[r][c] -= factor * v[c];
        }
        rows.push_back(std::move(v));
        pivots.push_back(pivot);
        return true;
    }

    size_t rank() const { return rows.size(); }
};

}  // namespace detail

/// Minimal-generator degree counts of the invariant ring of H (typically a
/// doubled action on W + W*), through the cap.  For each degree, A_m is
/// spanned by Reynolds averages of monomials and the new-generator count is
/// dim A_m minus the rank of products of lower-degree invariants; pivoting is
/// deterministic in lexicographic monomial order, so reports are
/// reproducible.  The completeness flag records that degrees cap+1 and cap+2
/// contribute no generators.
inline GeneratorDegrees minimal_generator_degrees(const MatrixGroup& H, int cap) {
    if (cap < 2) throw std::invalid_argument("minimal_generator_degrees: cap must be >= 2");
    if (H.elements.empty()) throw std::invalid_argument("minimal_generator_degrees: group not closed");
    const unsigned nvars = H.dim;
    const int probe = cap + 2;
    GradedSeries molien = molien_series(H, probe);
    const Rational inv_order(BigInt(1), BigInt(static_cast<long long>(H.order())));

    GeneratorDegrees out;
    out.complete = true;
    std::map<int, std::vector<detail::SparsePoly>> invariant_basis;
    for (int m = 1; m <= probe; ++m) {
        if (!molien.at(m).is_integer()) throw std::logic_error("minimal_generator_degrees: bad Molien");
        const long long target = molien.at(m).as_integer().to_int64();
        auto monomials = detail::monomials_of_degree(nvars, m);
        std::map<std::vector<int>, size_t> index;
        for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
        auto densify = [&](const detail::SparsePoly& p) {
            std::vector<CyclotomicNumber> row(monomials.size(), CyclotomicNumber(H.field));
            for (const auto& [mono, c] : p) row[index.at(mono)] = c;
            return row;
        };

        detail::RowReducer reducer;
        std::vector<detail::SparsePoly> basis_polys;
        // products of invariants of complementary lower degrees
        for (int j = 1; 2 * j <= m; ++j) {
            const auto& lower = invariant_basis[j];
            const auto& upper = invariant_basis[m - j];
            for (size_t a = 0; a < lower.size(); ++a) {
                size_t b_start = (j == m - j) ? a : 0;
                for (size_t b = b_start; b < upper.size(); ++b) {
                    detail::SparsePoly prod = detail::sparse_mul(lower[a], upper[b]);
                    if (reducer.insert(densify(prod))) basis_polys.push_back(std::move(prod));
                }
            }
        }
        const long long product_rank = static_cast<long long>(reducer.rank());
        if (product_rank > target)
            throw std::logic_error("minimal_generator_degrees: products exceed invariant dimension");
        const long long new_generators = target - product_rank;

        // extend with Reynolds images of monomials until the space is full
        for (size_t i = 0; i < monomials.size() && reducer.rank() < static_cast<size_t>(target); ++i) {
            detail::SparsePoly averaged;
            for (const auto& h : H.elements) {
                detail::SparsePoly image = detail::substitute_monomial(h, monomials[i]);
                for (const auto& [mono, c] : image) detail::sparse_add(averaged, mono, c * inv_order);
            }
            if (averaged.empty()) continue;
            if (reducer.insert(densify(averaged))) basis_polys.push_back(std::move(averaged));
        }
        if (reducer.rank() != static_cast<size_t>(target))
            throw std::logic_error("minimal_generator_degrees: Reynolds images failed to span");
        invariant_basis[m] = std::move(basis_polys);

        if (new_generators > 0) {
            if (m <= cap)
                out.counts[m] = static_cast<int>(new_generators);
            else
                out.complete = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// orbit-type strata

namespace detail {

/// Canonical reduced row-echelon equations of a subspace.
struct SubspaceEq {
    std::vector<std::vector<CyclotomicNumber>> rows;

    std::string key() const {
        std::string s = std::to_string(rows.size()) + ";";
        for (const auto& row : rows) {
            for (const auto& x : row) {
                for (const auto& c : x.coefficients()) s += c.to_string() + ",";
                s += "|";
            }
            s += ";";
        }
        return s;
    }
};

inline SubspaceEq rref_of(const std::vector<std::vector<CyclotomicNumber>>& raw_rows) {
    RowReducer reducer;
    for (const auto& r : raw_rows) reducer.insert(r);
    // order rows by pivot column for a canonical form
    std::vector<size_t> perm(reducer.rows.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](size_t a, size_t b) { return reducer.pivots[a] < reducer.pivots[b]; });
    SubspaceEq eq;
    for (size_t i : perm) eq.rows.push_back(reducer.rows[i]);
    return eq;
}

inline std::vector<std::vector<CyclotomicNumber>> fixed_space_equations(const CycMatrix& h) {
    std::vector<std::vector<CyclotomicNumber>> rows;
    const unsigned n = h.dim();
    for (unsigned i = 0; i < n; ++i) {
        std::vector<CyclotomicNumber> row;
        row.reserve(n);
        for (unsigned j = 0; j < n; ++j) {
            CyclotomicNumber v = h.at(i, j);
            if (i == j) v -= CyclotomicNumber(h.field(), Rational(1));
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Does h fix the subspace with the given equations pointwise?  Equivalent to
/// the rows of (h - 1) lying in the row space of the equations.
inline bool fixes_pointwise(const SubspaceEq& eq, const CycMatrix& h) {
    RowReducer reducer;
    for (const auto& r : eq.rows) reducer.insert(r);
    size_t base = reducer.rank();
    for (const auto& r : fixed_space_equations(h))
        if (reducer.insert(r)) return false;
    return reducer.rank() == base;
}

/// Equations of h(F) for F given by equations E: the row space of E h^{-1}.
inline SubspaceEq image_subspace(const SubspaceEq& eq, const CycMatrix& h_inverse) {
    std::vector<std::vector<CyclotomicNumber>> rows;
    const unsigned n = h_inverse.dim();
    for (const auto& e : eq.rows) {
        std::vector<CyclotomicNumber> row(n, CyclotomicNumber(h_inverse.field()));
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i) {
                if (e[i].is_zero() || h_inverse.at(i, j).is_zero()) continue;
                row[j] += e[i] * h_inverse.at(i, j);
            }
        rows.push_back(std::move(row));
    }
    return rref_of(rows);
}

}  // namespace detail

/// Real codimensions of the orbit-type strata of W/H with nontrivial
/// isotropy: one entry per conjugacy class of isotropy groups that occurs,
/// computed from the intersection lattice of the element fixed spaces.
inline std::vector<int> stratum_codims(const MatrixGroup& H, size_t order_cap = 100) {
    if (H.order() > order_cap) throw std::invalid_argument("stratum_codims: group order too large");
    std::map<std::string, detail::SubspaceEq> lattice;
    std::deque<detail::SubspaceEq> queue;
    for (const auto& h : H.elements) {
        if (h.is_identity()) continue;
        detail::SubspaceEq eq = detail::rref_of(detail::fixed_space_equations(h));
        auto [it, inserted] = lattice.emplace(eq.key(), eq);
        if (inserted) queue.push_back(it->second);
    }
    // close under pairwise intersection
    while (!queue.empty()) {
        detail::SubspaceEq current = queue.front();
        queue.pop_front();
        std::vector<detail::SubspaceEq> existing;
        existing.reserve(lattice.size());
        for (const auto& [k, eq] : lattice) existing.push_back(eq);
        for (const auto& other : existing) {
            auto rows = current.rows;
            rows.insert(rows.end(), other.rows.begin(), other.rows.end());
            detail::SubspaceEq inter = detail::rref_of(rows);
            auto [it, inserted] = lattice.emplace(inter.key(), inter);
            if (inserted) queue.push_back(it->second);
        }
    }
    // group subspaces into H-orbits and record one codimension per orbit
    std::set<std::string> visited;
    std::vector<int> codims;
    for (const auto& [key, eq] : lattice) {
        if (visited.count(key)) continue;
        bool nontrivial_isotropy = false;
        for (const auto& h : H.elements) {
            if (!h.is_identity() && detail::fixes_pointwise(eq, h)) {
                nontrivial_isotropy = true;
                break;
            }
        }
        for (const auto& h : H.elements) {
            detail::SubspaceEq image = detail::image_subspace(eq, h.conj_transpose());
            visited.insert(image.key());
        }
        if (nontrivial_isotropy) codims.push_back(2 * static_cast<int>(eq.rows.size()));
    }
    std::sort(codims.begin(), codims.end());
    return codims;
}

}  // namespace symquot

#endif
