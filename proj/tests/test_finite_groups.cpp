#include <set>

#include "doctest.h"
#include "symquot/finite_group.hpp"

using namespace symquot;

namespace {

// Oracle: Molien coefficient of the doubled cyclic group by congruence
// counting, dim A_k = #{(a,b) : a + b = k, a = b mod m}.
long long cyclic_doubled_count(unsigned m, int k) {
    long long count = 0;
    for (int a = 0; a <= k; ++a)
        if (((a - (k - a)) % static_cast<int>(m) + m) % m == 0) ++count;
    return count;
}

MatrixGroup trivial_group_on(unsigned n) {
    auto field = CyclotomicField::get(1);
    return close_group({CycMatrix::identity(field, n)}, 2, "trivial");
}

// S_3 as real 2x2 rotation and reflection matrices over Q(zeta_12), where
// sqrt(3) = zeta_12 + zeta_12^11.
MatrixGroup symmetric3_real() {
    auto field = CyclotomicField::get(12);
    CyclotomicNumber sqrt3 = CyclotomicNumber::zeta(12, 1) + CyclotomicNumber::zeta(12, 11);
    Rational half(BigInt(1), BigInt(2));
    CycMatrix rot(field, 2);
    rot.at(0, 0) = CyclotomicNumber::from_rational(12, -half);
    rot.at(0, 1) = -(sqrt3 * half);
    rot.at(1, 0) = sqrt3 * half;
    rot.at(1, 1) = CyclotomicNumber::from_rational(12, -half);
    CycMatrix refl(field, 2);
    refl.at(0, 0) = CyclotomicNumber::from_rational(12, Rational(1));
    refl.at(1, 1) = CyclotomicNumber::from_rational(12, Rational(-1));
    return close_group({rot, refl}, 10, "S_3 real");
}

}  // namespace

TEST_CASE("close_group basics") {
    MatrixGroup z4 = cyclic_group(4);
    CHECK(z4.order() == 4);
    CHECK(z4.elements[0].is_identity());

    CHECK(trivial_group_on(1).order() == 1);

    MatrixGroup s3 = symmetric3_real();
    CHECK(s3.order() == 6);

    // non-unitary generator is rejected
    auto field = CyclotomicField::get(1);
    CycMatrix shear = CycMatrix::identity(field, 2);
    shear.at(0, 1) = CyclotomicNumber::from_rational(1, Rational(1));
    CHECK_THROWS_AS(close_group({shear}, 10), std::invalid_argument);

    // cap enforcement
    CHECK_THROWS_AS(close_group(symmetric3_standard().generators, 4), std::runtime_error);
}

TEST_CASE("doubled action blocks") {
    MatrixGroup z4 = cyclic_group(4);
    MatrixGroup d = doubled_action(z4);
    CHECK(d.dim == 2);
    CHECK(d.order() == 4);
    for (const auto& h : d.elements) CHECK(h.is_unitary());
    // second block is the conjugate of the first
    CHECK(d.elements[1].at(1, 1) == d.elements[1].at(0, 0).conjugate());
}

TEST_CASE("molien_series basics") {
    GradedSeries trivial = molien_series(trivial_group_on(1), 6);
    for (int m = 0; m <= 6; ++m) CHECK(trivial.at(m) == Rational(1));

    GradedSeries z2 = molien_series(plus_minus_one(1), 8);
    for (int m = 0; m <= 8; ++m) CHECK(z2.at(m) == Rational(m % 2 == 0 ? 1 : 0));

    GradedSeries z4d = molien_series(doubled_action(cyclic_group(4)), 8);
    // frozen: 1, 0, 1, 0, 3, 0, 3, 0, 5
    std::vector<long long> want = {1, 0, 1, 0, 3, 0, 3, 0, 5};
    for (int m = 0; m <= 8; ++m) CHECK(z4d.at(m) == Rational(want[static_cast<size_t>(m)]));
}

TEST_CASE("doubled cyclic Molien equals congruence counting for m <= 8, k <= 20") {
    for (unsigned m = 1; m <= 8; ++m) {
        GradedSeries s = molien_series(doubled_action(cyclic_group(m)), 20);
        for (int k = 0; k <= 20; ++k) CHECK(s.at(k) == Rational(cyclic_doubled_count(m, k)));
    }
}

TEST_CASE("molien degree zero is one and subgroups dominate degreewise") {
    for (const MatrixGroup& g :
         {cyclic_group(3), cyclic_group(6), symmetric3_standard(), plus_minus_one(2)}) {
        GradedSeries s = molien_series(g, 10);
        CHECK(s.at(0) == Rational(1));
        for (int m = 0; m <= 10; ++m) CHECK(s.at(m) >= Rational(0));
    }
    // Z_2 < Z_4 acting on C: the larger group has smaller coefficients
    GradedSeries z2 = molien_series(cyclic_group(2), 12);
    GradedSeries z4 = molien_series(cyclic_group(4), 12);
    for (int m = 0; m <= 12; ++m) CHECK(z4.at(m) <= z2.at(m));
}

TEST_CASE("molien via determinant path equals the averaged trace-exponential path") {
    for (const MatrixGroup& g : {doubled_action(cyclic_group(4)), symmetric3_standard(),
                                 doubled_action(symmetric3_standard())}) {
        const int order = 10;
        std::vector<CyclotomicNumber> sum(static_cast<size_t>(order) + 1, CyclotomicNumber(g.field));
        for (const auto& h : g.elements) {
            auto series = char_series_cyclotomic(h, order);
            for (int m = 0; m <= order; ++m) sum[static_cast<size_t>(m)] += series[static_cast<size_t>(m)];
        }
        GradedSeries averaged(order);
        Rational inv(BigInt(1), BigInt(static_cast<long long>(g.order())));
        for (int m = 0; m <= order; ++m)
            averaged.set(m, (sum[static_cast<size_t>(m)] * inv).rational_part());
        CHECK(averaged == molien_series(g, order));
    }
}

TEST_CASE("molien of the two S_3 forms coincide") {
    // the complex unitary form over Q(zeta_3) and the real rotation form over
    // Q(zeta_12) carry the same character, hence the same invariant theory
    CHECK(molien_series(symmetric3_standard(), 12) == molien_series(symmetric3_real(), 12));
}

TEST_CASE("sym2_invariant_dim") {
    CHECK(sym2_invariant_dim(trivial_group_on(2)) == 3);
    CHECK(sym2_invariant_dim(plus_minus_one(1)) == 1);
    CHECK(sym2_invariant_dim(cyclic_group(4)) == 0);
    // always equals the degree-2 Molien coefficient
    for (const MatrixGroup& g : {cyclic_group(4), symmetric3_standard(), plus_minus_one(2),
                                 doubled_action(cyclic_group(4)), doubled_action(symmetric3_standard())}) {
        CHECK(Rational(BigInt(sym2_invariant_dim(g))) == molien_series(g, 2).at(2));
    }
}

TEST_CASE("quadratic_invariant_count") {
    RealDecomposition four_copies{{{4, 3}}};
    CHECK(quadratic_invariant_count(four_copies) == 10);
    CHECK(quadratic_invariant_count(RealDecomposition{{{1, 1}}}) == 1);
    RealDecomposition mixed{{{3, 1}, {2, 1}, {1, 1}}};
    CHECK(quadratic_invariant_count(mixed) == 10);
    RealDecomposition complex_type{{{2, 2, false}}};
    CHECK_THROWS_AS(quadratic_invariant_count(complex_type), std::invalid_argument);
}

TEST_CASE("decomposition patterns: only 3W1+2W2+W3 attains ten quadratic invariants in dim 6") {
    auto patterns = enumerate_decomposition_patterns(6);
    CHECK(patterns.size() > 10);
    std::vector<DecompPattern> attaining;
    for (const auto& p : patterns)
        if (p.quadratic_count() == 10) attaining.push_back(p);
    REQUIRE(attaining.size() == 1);
    std::vector<std::pair<int, int>> want = {{3, 1}, {2, 1}, {1, 1}};
    CHECK(attaining[0].classes == want);
    CHECK(attaining[0].has_odd_one_dim_class());
}

TEST_CASE("minimal_generator_degrees frozen examples") {
    GeneratorDegrees z4 = minimal_generator_degrees(doubled_action(cyclic_group(4)), 6);
    CHECK(z4.complete);
    CHECK(z4.counts == std::map<int, int>{{2, 1}, {4, 2}});

    GeneratorDegrees s3 = minimal_generator_degrees(doubled_action(symmetric3_standard()), 6);
    CHECK(s3.complete);
    CHECK(s3.counts == std::map<int, int>{{2, 3}, {3, 4}});

    GeneratorDegrees trivial = minimal_generator_degrees(doubled_action(trivial_group_on(1)), 3);
    CHECK(trivial.complete);
    CHECK(trivial.counts == std::map<int, int>{{1, 2}});
}

TEST_CASE("free algebra on reported generators dominates the Molien series") {
    for (const MatrixGroup& g : {doubled_action(cyclic_group(4)), doubled_action(cyclic_group(5)),
                                 doubled_action(symmetric3_standard())}) {
        const int order = 12;
        GeneratorDegrees gens = minimal_generator_degrees(g, order);
        REQUIRE(gens.complete);
        std::vector<DenomFactor> denom;
        for (auto [d, count] : gens.counts) denom.push_back({d, count});
        GradedSeries free_series = rational_fn_expand({BigInt(1)}, denom, order);
        GradedSeries molien = molien_series(g, order);
        bool difference_seen = false;
        for (int m = 0; m <= order; ++m) {
            CHECK(free_series.at(m) >= molien.at(m));
            if (free_series.at(m) != molien.at(m)) difference_seen = true;
        }
        // each of these invariant rings has a relation within the order
        CHECK(difference_seen);
    }
}

TEST_CASE("stratum_codims") {
    // Z_2 x Z_3 acting as -1 on the first coordinate and a rotation of order
    // 3 on the second: two codimension-2 strata plus the origin
    auto field = CyclotomicField::get(6);
    CycMatrix flip = CycMatrix::identity(field, 2);
    flip.at(0, 0) = CyclotomicNumber::from_rational(6, Rational(-1));
    CycMatrix rot = CycMatrix::identity(field, 2);
    rot.at(1, 1) = CyclotomicNumber::zeta(6, 2);
    MatrixGroup model = close_group({flip, rot}, 10, "Z_2 x Z_3");
    CHECK(model.order() == 6);
    CHECK(stratum_codims(model) == std::vector<int>{2, 2, 4});

    CHECK(stratum_codims(trivial_group_on(2)).empty());

    CHECK(stratum_codims(plus_minus_one(2)) == std::vector<int>{4});

    // S_3 on C^2: the three reflection lines are conjugate, one stratum, plus
    // the origin with full isotropy
    CHECK(stratum_codims(symmetric3_standard()) == std::vector<int>{2, 4});

    MatrixGroup big = doubled_action(close_group(symmetric3_standard().generators, 10));
    CHECK_THROWS_AS(stratum_codims(big, 2), std::invalid_argument);
}
