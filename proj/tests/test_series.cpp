#include <random>

#include "doctest.h"
#include "symquot/graded_series.hpp"

using namespace symquot;

namespace {

GradedSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    GradedSeries s(order);
    for (int m = 0; m <= order; ++m) s.set(m, Rational(BigInt(num(rng)), BigInt(den(rng))));
    return s;
}

// Independent convolution oracle: expand a geometric-type product directly.
GradedSeries geometric(int d, int order) {
    GradedSeries s(order);
    for (int m = 0; m <= order; m += d) s.set(m, Rational(1));
    return s;
}

}  // namespace

TEST_CASE("series_mul basics") {
    GradedSeries one_plus_t(4), one_minus_t(4);
    one_plus_t.set(0, Rational(1));
    one_plus_t.set(1, Rational(1));
    one_minus_t.set(0, Rational(1));
    one_minus_t.set(1, Rational(-1));

    GradedSeries prod = series_mul(one_plus_t, one_minus_t);
    CHECK(prod.at(0) == Rational(1));
    CHECK(prod.at(1) == Rational(0));
    CHECK(prod.at(2) == Rational(-1));
    CHECK(prod.at(3) == Rational(0));

    std::mt19937_64 rng(42);
    GradedSeries s = random_series(rng, 4);
    CHECK(series_mul(s, GradedSeries::one(4)) == s);

    GradedSeries mismatched(3);
    CHECK_THROWS_AS(series_mul(s, mismatched), std::invalid_argument);
}

TEST_CASE("geometric series times (1 - t) telescopes to 1") {
    int order = 12;
    GradedSeries geo = geometric(1, order);
    GradedSeries one_minus_t(order);
    one_minus_t.set(0, Rational(1));
    one_minus_t.set(1, Rational(-1));
    CHECK(series_mul(geo, one_minus_t) == GradedSeries::one(order));
}

TEST_CASE("series_mul is associative and commutative up to truncation") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 50; ++iter) {
        GradedSeries a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    }
}

TEST_CASE("rational_fn_expand: geometric series") {
    GradedSeries s = rational_fn_expand({BigInt(1)}, {{1, 1}}, 3);
    for (int m = 0; m <= 3; ++m) CHECK(s.at(m) == Rational(1));
}

TEST_CASE("rational_fn_expand: 1/((1-t^2)(1-t^3)) counts monomials u^a v^b with 2a+3b=m") {
    int order = 12;
    GradedSeries s = rational_fn_expand({BigInt(1)}, {{2, 1}, {3, 1}}, order);
    for (int m = 0; m <= order; ++m) {
        long long count = 0;
        for (int a = 0; 2 * a <= m; ++a)
            if ((m - 2 * a) % 3 == 0) ++count;
        CHECK(s.at(m) == Rational(count));
    }
    // frozen low-order values: 1,0,1,1,1,1,2
    CHECK(s.at(0) == Rational(1));
    CHECK(s.at(1) == Rational(0));
    CHECK(s.at(2) == Rational(1));
    CHECK(s.at(3) == Rational(1));
    CHECK(s.at(4) == Rational(1));
    CHECK(s.at(5) == Rational(1));
    CHECK(s.at(6) == Rational(2));
}

TEST_CASE("rational_fn_expand: (1-t^2)/(1-t)^2 = (1+t)/(1-t) via convolution oracle") {
    int order = 8;
    GradedSeries s = rational_fn_expand({BigInt(1), BigInt(0), BigInt(-1)}, {{1, 2}}, order);
    // oracle: (1+t) * sum t^k by direct convolution gives 1,2,2,2,...
    GradedSeries geo = geometric(1, order);
    GradedSeries one_plus_t(order);
    one_plus_t.set(0, Rational(1));
    one_plus_t.set(1, Rational(1));
    CHECK(s == series_mul(one_plus_t, geo));
    CHECK(s.at(0) == Rational(1));
    for (int m = 1; m <= order; ++m) CHECK(s.at(m) == Rational(2));
}

TEST_CASE("rational_fn_expand convolved with its denominator reproduces the numerator") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> deg(1, 4), mult(1, 2), coeff(-5, 5);
    for (int iter = 0; iter < 40; ++iter) {
        int order = 10;
        std::vector<BigInt> numer;
        for (int i = 0, len = 1 + static_cast<int>(rng() % 4); i < len; ++i)
            numer.emplace_back(coeff(rng));
        std::vector<DenomFactor> denom;
        for (int i = 0, nf = 1 + static_cast<int>(rng() % 2); i < nf; ++i)
            denom.push_back({deg(rng), mult(rng)});
        GradedSeries expanded = rational_fn_expand(numer, denom, order);
        // expand the denominator itself as a (finite) series
        GradedSeries denom_series = GradedSeries::one(order);
        for (const auto& f : denom)
            for (int rep = 0; rep < f.multiplicity; ++rep) {
                GradedSeries factor(order);
                factor.set(0, Rational(1));
                if (f.degree <= order) factor.set(f.degree, Rational(-1));
                denom_series = series_mul(denom_series, factor);
            }
        GradedSeries recovered = series_mul(expanded, denom_series);
        for (int m = 0; m <= order; ++m) {
            Rational want = m < static_cast<int>(numer.size()) ? Rational(numer[static_cast<size_t>(m)])
                                                               : Rational(0);
            CHECK(recovered.at(m) == want);
        }
    }
}

TEST_CASE("rational_fn_expand rejects zero constant term in the denominator") {
    CHECK_THROWS_AS(rational_fn_expand({BigInt(1)}, {{0, 1}}, 4), std::invalid_argument);
}
