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

#ifndef SYMQUOT_CYC_MATRIX_HPP
#define SYMQUOT_CYC_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symquot/cyclotomic.hpp"
#include "symquot/graded_series.hpp"

namespace symquot {

/// Square matrix over a fixed cyclotomic field.
class CycMatrix {
  public:
    CycMatrix(std::shared_ptr<const CyclotomicField> field, unsigned n)
        : field_(std::move(field)), n_(n), a_(static_cast<size_t>(n) * n, CyclotomicNumber(field_)) {}

    static CycMatrix identity(std::shared_ptr<const CyclotomicField> field, unsigned n) {
        CycMatrix m(std::move(field), n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = CyclotomicNumber(m.field_, Rational(1));
        return m;
    }

    unsigned dim() const { return n_; }
    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

    CyclotomicNumber& at(unsigned i, unsigned j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const CyclotomicNumber& at(unsigned i, unsigned j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
        if (x.n_ != y.n_ || x.field_->conductor() != y.field_->conductor())
            throw std::invalid_argument("CycMatrix: dimension or conductor mismatch");
        CycMatrix r(x.field_, x.n_);
        for (unsigned i = 0; i < x.n_; ++i)
            for (unsigned k = 0; k < x.n_; ++k) {
                const CyclotomicNumber& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (unsigned j = 0; j < x.n_; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    r.at(i, j) += xik * y.at(k, j);
                }
            }
        return r;
    }

    CycMatrix conjugate() const {
        CycMatrix r(field_, n_);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) r.at(i, j) = at(i, j).conjugate();
        return r;
    }

    CycMatrix conj_transpose() const {
        CycMatrix r(field_, n_);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) r.at(j, i) = at(i, j).conjugate();
        return r;
    }

    CyclotomicNumber trace() const {
        CyclotomicNumber t(field_);
        for (unsigned i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool is_identity() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                const Rational want = i == j ? Rational(1) : Rational(0);
                if (at(i, j) != CyclotomicNumber(field_, want)) return false;
            }
        return true;
    }

    /// Preserves the standard Hermitian form: M * M^dagger = 1.
    bool is_unitary() const { return (*this * conj_transpose()).is_identity(); }

    CyclotomicNumber determinant() const {
        CycMatrix m = *this;
        CyclotomicNumber det(field_, Rational(1));
        for (unsigned col = 0, row = 0; col < n_ && row < n_; ++col) {
            unsigned pivot = row;
            while (pivot < n_ && m.at(pivot, col).is_zero()) ++pivot;
            if (pivot == n_) return CyclotomicNumber(field_);  // singular
            if (pivot != row) {
                for (unsigned j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
                det = -det;
            }
            det *= m.at(row, col);
            CyclotomicNumber inv = m.at(row, col).inverse();
            for (unsigned r = row + 1; r < n_; ++r) {
                if (m.at(r, col).is_zero()) continue;
                CyclotomicNumber f = m.at(r, col) * inv;
                for (unsigned j = col; j < n_; ++j) m.at(r, j) -= f * m.at(row, j);
            }
            ++row;
        }
        return det;
    }

    /// diag(A, B)
    static CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b) {
        if (a.field_->conductor() != b.field_->conductor())
            throw std::invalid_argument("CycMatrix: conductor mismatch");
        CycMatrix r(a.field_, a.n_ + b.n_);
        for (unsigned i = 0; i < a.n_; ++i)
            for (unsigned j = 0; j < a.n_; ++j) r.at(i, j) = a.at(i, j);
        for (unsigned i = 0; i < b.n_; ++i)
            for (unsigned j = 0; j < b.n_; ++j) r.at(a.n_ + i, a.n_ + j) = b.at(i, j);
        return r;
    }

    friend bool operator==(const CycMatrix& x, const CycMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const CycMatrix& x, const CycMatrix& y) { return !(x == y); }

    /// Deterministic total order for use as a set key.
    friend bool operator<(const CycMatrix& x, const CycMatrix& y) {
        if (x.n_ != y.n_) return x.n_ < y.n_;
        for (size_t k = 0; k < x.a_.size(); ++k) {
            int c = CyclotomicNumber::compare(x.a_[k], y.a_[k]);
            if (c != 0) return c < 0;
        }
        return false;
    }

  private:
    std::shared_ptr<const CyclotomicField> field_;
    unsigned n_;
    std::vector<CyclotomicNumber> a_;
};

/// Coefficients of 1/det(1 - t M) up to the given order, kept cyclotomic.
/// Uses the Newton recurrence m*h_m = sum_{k=1..m} tr(M^k) h_{m-k}, whose
/// divisions are exact in the field.
inline std::vector<CyclotomicNumber> char_series_cyclotomic(const CycMatrix& M, int order) {
    std::vector<CyclotomicNumber> traces(static_cast<size_t>(order) + 1, CyclotomicNumber(M.field()));
    CycMatrix power = M;
    for (int k = 1; k <= order; ++k) {
        traces[static_cast<size_t>(k)] = power.trace();
        if (k < order) power = power * M;
    }
    std::vector<CyclotomicNumber> h(static_cast<size_t>(order) + 1, CyclotomicNumber(M.field()));
    h[0] = CyclotomicNumber(M.field(), Rational(1));
    for (int m = 1; m <= order; ++m) {
        CyclotomicNumber acc(M.field());
        for (int k = 1; k <= m; ++k)
            acc += traces[static_cast<size_t>(k)] * h[static_cast<size_t>(m - k)];
        h[static_cast<size_t>(m)] = acc * Rational(BigInt(1), BigInt(m));
    }
    return h;
}

/// Power-series expansion of 1/det(1 - t M) with rational coefficients.
/// Throws if M is singular or if a coefficient is irrational (a matrix whose
/// eigenvalues are not closed under complex conjugation).
inline GradedSeries cyclotomic_char_poly_series(const CycMatrix& M, int order) {
    if (M.determinant().is_zero())
        throw std::domain_error("cyclotomic_char_poly_series: matrix is not invertible");
    std::vector<CyclotomicNumber> h = char_series_cyclotomic(M, order);
    GradedSeries s(order);
    for (int m = 0; m <= order; ++m) s.set(m, h[static_cast<size_t>(m)].rational_part());
    return s;
}

}  // namespace symquot

#endif
