#include <random>

#include "doctest.h"
#include "symquot/cyc_matrix.hpp"
#include "symquot/cyclotomic.hpp"

using namespace symquot;

namespace {

// Test-only oracle: det(1 - t M) by cofactor expansion over cyclotomic
// polynomial entries, then series inversion by long division.  Independent of
// the Newton-recurrence path in cyc_matrix.hpp.
using CycPoly = std::vector<CyclotomicNumber>;  // coefficients by t-degree

CycPoly poly_mul(const CycPoly& a, const CycPoly& b, unsigned N) {
    CycPoly r(a.size() + b.size() - 1, CyclotomicNumber::from_rational(N, Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

CycPoly det_one_minus_tM(const CycMatrix& M, std::vector<unsigned> rows, std::vector<unsigned> cols) {
    unsigned N = M.field()->conductor();
    if (rows.empty()) return {CyclotomicNumber::from_rational(N, Rational(1))};
    unsigned i = rows[0];
    std::vector<unsigned> rest_rows(rows.begin() + 1, rows.end());
    CycPoly acc{CyclotomicNumber::from_rational(N, Rational(0))};
    int sign = 1;
    for (size_t c = 0; c < cols.size(); ++c) {
        // entry of (1 - tM) at (i, cols[c]) as a linear polynomial in t
        CycPoly entry{CyclotomicNumber::from_rational(N, Rational(i == cols[c] ? 1 : 0)),
                      -M.at(i, cols[c])};
        std::vector<unsigned> rest_cols;
        for (size_t c2 = 0; c2 < cols.size(); ++c2)
            if (c2 != c) rest_cols.push_back(cols[c2]);
        CycPoly minor = det_one_minus_tM(M, rest_rows, rest_cols);
        CycPoly term = poly_mul(entry, minor, N);
        if (sign < 0)
            for (auto& x : term) x = -x;
        if (acc.size() < term.size()) acc.resize(term.size(), CyclotomicNumber::from_rational(N, Rational(0)));
        for (size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
        sign = -sign;
    }
    return acc;
}

// 1/p(t) to the given order by long division; requires p(0) = 1.
std::vector<CyclotomicNumber> series_invert(const CycPoly& p, int order, unsigned N) {
    std::vector<CyclotomicNumber> inv(static_cast<size_t>(order) + 1,
                                      CyclotomicNumber::from_rational(N, Rational(0)));
    inv[0] = CyclotomicNumber::from_rational(N, Rational(1));
    for (int m = 1; m <= order; ++m) {
        CyclotomicNumber acc = CyclotomicNumber::from_rational(N, Rational(0));
        for (int k = 1; k <= m && k < static_cast<int>(p.size()); ++k)
            acc += p[static_cast<size_t>(k)] * inv[static_cast<size_t>(m - k)];
        inv[static_cast<size_t>(m)] = -acc;
    }
    return inv;
}

std::vector<CyclotomicNumber> char_series_by_division(const CycMatrix& M, int order) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < M.dim(); ++i) idx.push_back(i);
    CycPoly det = det_one_minus_tM(M, idx, idx);
    return series_invert(det, order, M.field()->conductor());
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small conductors") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{BigInt(-1), BigInt(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{BigInt(1), BigInt(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});
    CHECK(cyclotomic_polynomial(3) == std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(1)});
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{BigInt(1), BigInt(-1), BigInt(1)});
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1), BigInt(0), BigInt(1)});
}

TEST_CASE("zeta_N^N = 1 and Phi_N(zeta_N) = 0 for N <= 24") {
    for (unsigned N = 1; N <= 24; ++N) {
        CyclotomicNumber z = CyclotomicNumber::zeta(N, 1);
        CyclotomicNumber p = CyclotomicNumber::from_rational(N, Rational(1));
        for (unsigned k = 0; k < N; ++k) p *= z;
        CHECK(p == CyclotomicNumber::from_rational(N, Rational(1)));

        const auto phi = cyclotomic_polynomial(N);
        CyclotomicNumber value = CyclotomicNumber::from_rational(N, Rational(0));
        CyclotomicNumber zpow = CyclotomicNumber::from_rational(N, Rational(1));
        for (size_t j = 0; j < phi.size(); ++j) {
            value += zpow * Rational(phi[j]);
            zpow *= z;
        }
        CHECK(value.is_zero());
    }
}

TEST_CASE("cyclotomic arithmetic is a field: x * x^{-1} = 1") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> coeff(-4, 4);
    for (unsigned N : {3u, 4u, 5u, 8u, 12u, 24u}) {
        auto field = CyclotomicField::get(N);
        for (int iter = 0; iter < 20; ++iter) {
            CyclotomicNumber x(field);
            for (unsigned j = 0; j < field->degree(); ++j)
                x += CyclotomicNumber::zeta(N, j) * Rational(coeff(rng));
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == CyclotomicNumber::from_rational(N, Rational(1)));
        }
    }
    CHECK_THROWS_AS(CyclotomicNumber::from_rational(5, Rational(0)).inverse(), std::domain_error);
}

TEST_CASE("conjugation fixes rationals, inverts roots, and fixes z + z^{-1}") {
    CyclotomicNumber z = CyclotomicNumber::zeta(8, 1);
    CHECK(z.conjugate() == CyclotomicNumber::zeta(8, 7));
    CHECK((z * z.conjugate()) == CyclotomicNumber::from_rational(8, Rational(1)));
    CyclotomicNumber real_comb = z + z.conjugate();
    CHECK(real_comb.conjugate() == real_comb);
    CHECK(CyclotomicNumber::from_rational(8, Rational(BigInt(3), BigInt(7))).conjugate() ==
          CyclotomicNumber::from_rational(8, Rational(BigInt(3), BigInt(7))));
}

TEST_CASE("rational values of conductor 1 mix with any conductor") {
    CyclotomicNumber half = CyclotomicNumber::from_rational(1, Rational(BigInt(1), BigInt(2)));
    CyclotomicNumber z3 = CyclotomicNumber::zeta(3, 1);
    CyclotomicNumber sum = half + z3;
    CHECK(sum.conductor() == 3);
    CHECK(sum - z3 == CyclotomicNumber::from_rational(3, Rational(BigInt(1), BigInt(2))));
    CHECK_THROWS_AS(CyclotomicNumber::zeta(3, 1) + CyclotomicNumber::zeta(4, 1), std::invalid_argument);
}

TEST_CASE("cyclotomic_char_poly_series trivial cases") {
    auto field1 = CyclotomicField::get(1);
    CycMatrix one = CycMatrix::identity(field1, 1);
    GradedSeries s = cyclotomic_char_poly_series(one, 5);
    for (int m = 0; m <= 5; ++m) CHECK(s.at(m) == Rational(1));  // 1/(1-t)

    CycMatrix minus_one(field1, 1);
    minus_one.at(0, 0) = CyclotomicNumber::from_rational(1, Rational(-1));
    GradedSeries alt = cyclotomic_char_poly_series(minus_one, 5);
    for (int m = 0; m <= 5; ++m) CHECK(alt.at(m) == Rational(m % 2 == 0 ? 1 : -1));  // 1/(1+t)

    CycMatrix zero(field1, 1);
    CHECK_THROWS_AS(cyclotomic_char_poly_series(zero, 5), std::domain_error);
}

TEST_CASE("char series of diag(i, -i) is 1/(1+t^2)") {
    auto field = CyclotomicField::get(4);
    CycMatrix m(field, 2);
    m.at(0, 0) = CyclotomicNumber::zeta(4, 1);
    m.at(1, 1) = CyclotomicNumber::zeta(4, 3);
    GradedSeries s = cyclotomic_char_poly_series(m, 8);
    // 1/(1+t^2) = 1 - t^2 + t^4 - ...
    for (int k = 0; k <= 8; ++k) {
        if (k % 2 == 1)
            CHECK(s.at(k) == Rational(0));
        else
            CHECK(s.at(k) == Rational((k / 2) % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("char series matches long-division oracle for finite-order matrices") {
    // permutation-with-root matrix of order 16 over Q(zeta_8), a diagonal
    // matrix with a conjugate pair, and a generic unitary of small order
    auto field = CyclotomicField::get(8);
    CycMatrix m(field, 2);
    m.at(0, 1) = CyclotomicNumber::zeta(8, 1);
    m.at(1, 0) = CyclotomicNumber::from_rational(8, Rational(1));
    REQUIRE(m.is_unitary());
    CHECK(char_series_cyclotomic(m, 12) == char_series_by_division(m, 12));

    CycMatrix diag(field, 3);
    diag.at(0, 0) = CyclotomicNumber::zeta(8, 3);
    diag.at(1, 1) = CyclotomicNumber::zeta(8, 5);
    diag.at(2, 2) = CyclotomicNumber::from_rational(8, Rational(-1));
    CHECK(char_series_cyclotomic(diag, 12) == char_series_by_division(diag, 12));
}

TEST_CASE("char series of a matrix with M^k = 1 matches the division oracle") {
    auto field = CyclotomicField::get(3);
    CycMatrix m(field, 2);
    m.at(0, 0) = CyclotomicNumber::zeta(3, 1);
    m.at(1, 1) = CyclotomicNumber::zeta(3, 2);
    CHECK(char_series_cyclotomic(m, 15) == char_series_by_division(m, 15));
    // conjugate-paired eigenvalues make the projected series rational here
    GradedSeries s = cyclotomic_char_poly_series(m, 15);
    // 1/((1-wt)(1-w^2 t)) = 1/(1+t+t^2): pattern 1,-1,0 repeating
    for (int k = 0; k <= 15; ++k) {
        int want = k % 3 == 0 ? 1 : (k % 3 == 1 ? -1 : 0);
        CHECK(s.at(k) == Rational(want));
    }
}

TEST_CASE("determinant and unitarity") {
    auto field = CyclotomicField::get(4);
    CycMatrix m(field, 2);
    m.at(0, 0) = CyclotomicNumber::zeta(4, 1);
    m.at(1, 1) = CyclotomicNumber::zeta(4, 3);
    CHECK(m.determinant() == CyclotomicNumber::from_rational(4, Rational(1)));
    CHECK(m.is_unitary());

    CycMatrix shear = CycMatrix::identity(field, 2);
    shear.at(0, 1) = CyclotomicNumber::from_rational(4, Rational(1));
    CHECK(!shear.is_unitary());
    CHECK(shear.determinant() == CyclotomicNumber::from_rational(4, Rational(1)));
}
