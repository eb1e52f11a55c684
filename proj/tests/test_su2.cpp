#include "doctest.h"
#include "symquot/su2.hpp"

using namespace symquot;

TEST_CASE("character_Rd") {
    CHECK(character_Rd(0) == LaurentPoly::constant(BigInt(1)));

    LaurentPoly r1;
    r1.add(1, BigInt(1));
    r1.add(-1, BigInt(1));
    CHECK(character_Rd(1) == r1);

    LaurentPoly r2;
    r2.add(2, BigInt(1));
    r2.add(0, BigInt(1));
    r2.add(-2, BigInt(1));
    CHECK(character_Rd(2) == r2);

    for (int d = 0; d <= 9; ++d) {
        CHECK(character_Rd(d).is_symmetric());
        CHECK(character_Rd(d).coeff(d) == BigInt(1));
    }
}

TEST_CASE("invariant_dim basics") {
    CHECK(invariant_dim(character_Rd(1)) == BigInt(0));
    CHECK(invariant_dim(character_Rd(2)) == BigInt(0));
    // R3 x R3 contains exactly one trivial summand
    CHECK(invariant_dim(character_Rd(3) * character_Rd(3)) == BigInt(1));
    LaurentPoly asym;
    asym.add(1, BigInt(1));
    CHECK_THROWS_AS(invariant_dim(asym), std::invalid_argument);
}

TEST_CASE("sym_power_character small cases") {
    CHECK(sym_power_character(character_Rd(1), 0) == LaurentPoly::constant(BigInt(1)));
    // Sym^2 R1 = R2
    CHECK(sym_power_character(character_Rd(1), 2) == character_Rd(2));
    // Sym^2 of 2R1 contains exactly one trivial summand
    LaurentPoly two_r1 = character_Rd(1) + character_Rd(1);
    CHECK(invariant_dim(sym_power_character(two_r1, 2)) == BigInt(1));
    // Sym^m R_d has dimension C(m + d, d)
    for (int d = 1; d <= 3; ++d)
        for (int m = 0; m <= 5; ++m) {
            LaurentPoly sym = sym_power_character(character_Rd(d), m);
            BigInt dim;
            for (const auto& [e, c] : sym.terms()) dim += c;
            long long binom = 1;
            for (int i = 1; i <= d; ++i) binom = binom * (m + i) / i;
            CHECK(dim == BigInt(binom));
            CHECK(sym.is_symmetric());
        }
}

TEST_CASE("exterior powers of the adjoint module via character arithmetic") {
    // e2 = (p1^2 - p2)/2 and e3 = (p1^3 - 3 p1 p2 + 2 p3)/6 of the R2
    // eigenvalues: Lambda^2(adjoint) = adjoint and Lambda^3(adjoint) = trivial
    LaurentPoly p1 = character_Rd(2);
    LaurentPoly p2 = p1.substitute_power(2);
    LaurentPoly p3 = p1.substitute_power(3);
    LaurentPoly e2_times_2 = p1 * p1 - p2;
    LaurentPoly want_2 = character_Rd(2) + character_Rd(2);
    CHECK(e2_times_2 == want_2);
    LaurentPoly e3_times_6 = p1 * p1 * p1 - p1 * p2.scaled(BigInt(3)) + p3.scaled(BigInt(2));
    CHECK(e3_times_6 == LaurentPoly::constant(BigInt(6)));
}

TEST_CASE("cayley_sylvester frozen values") {
    CHECK(cayley_sylvester(4, 2) == 1);  // the quadratic invariant of the binary quartic
    CHECK(cayley_sylvester(3, 2) == 0);
    CHECK(cayley_sylvester(1, 2) == 0);
    CHECK(cayley_sylvester(3, 4) == 1);  // the degree-4 invariant of the binary cubic
    CHECK(cayley_sylvester(0, 5) == 1);
    CHECK(cayley_sylvester(2, 2) == 1);
}

TEST_CASE("oracle equivalence: cayley_sylvester vs character method, d <= 8, m <= 12") {
    int cases = 0;
    for (int d = 0; d <= 8; ++d)
        for (int m = 0; m <= 12; ++m) {
            BigInt via_chars = invariant_dim(sym_power_character(character_Rd(d), m));
            CHECK(via_chars == BigInt(cayley_sylvester(d, m)));
            ++cases;
        }
    CHECK(cases == 117);
}

TEST_CASE("one-largeness table") {
    CHECK(!su2_is_one_large(SU2Module({1})));
    CHECK(!su2_is_one_large(SU2Module({1, 1})));
    CHECK(!su2_is_one_large(SU2Module({2})));
    CHECK(su2_is_one_large(SU2Module({1, 1, 1})));
    CHECK(su2_is_one_large(SU2Module({3})));
    CHECK(su2_is_one_large(SU2Module({2, 1})));
}

TEST_CASE("quotient series preconditions") {
    CHECK_THROWS_AS(quotient_hilbert_series_su2(SU2Module({2}), 6), std::domain_error);
    CHECK_THROWS_AS(quotient_hilbert_series_su2(SU2Module({1, 1}), 6), std::domain_error);
}

TEST_CASE("quotient series for R3: degree data of the cyclic-quotient picture") {
    GradedSeries s = quotient_hilbert_series_su2(SU2Module({3}), 8);
    CHECK(s.at(0) == Rational(1));
    CHECK(s.at(1) == Rational(0));
    CHECK(s.at(2) == Rational(1));
    CHECK(s.at(3) == Rational(0));
    // degree 4 must count the pairs (4,0), (0,4), (2,2) of a mod-4 balance
    CHECK(s.at(4) == Rational(3));
    // odd degrees vanish for R3
    for (int m = 1; m <= 8; m += 2) CHECK(s.at(m) == Rational(0));
}

TEST_CASE("quotient series for R4: generator degree counts 3 and 4") {
    GradedSeries s = quotient_hilbert_series_su2(SU2Module({4}), 6);
    CHECK(s.at(0) == Rational(1));
    CHECK(s.at(1) == Rational(0));
    CHECK(s.at(2) == Rational(3));
    // no degree-1 elements, so every degree-3 invariant class is a generator
    CHECK(s.at(3) == Rational(4));
}

TEST_CASE("quotient series sanity for a representative family") {
    for (int d : {3, 4, 5, 6}) {
        GradedSeries s = quotient_hilbert_series_su2(SU2Module({d}), 10);
        CHECK(s.at(0) == Rational(1));
        CHECK(s.at(1) == Rational(0));
        for (int m = 0; m <= 10; ++m) CHECK(s.at(m) >= Rational(0));
    }
    GradedSeries mixed = quotient_hilbert_series_su2(SU2Module({1, 2, 3}), 8);
    CHECK(mixed.at(0) == Rational(1));
    for (int m = 0; m <= 8; ++m) CHECK(mixed.at(m) >= Rational(0));
}

TEST_CASE("membership in the non-2-principal list") {
    CHECK(non_2principal_membership(SU2Module({4})) == SU2CandidateClass::OnList);
    CHECK(non_2principal_membership(SU2Module({2, 2})) == SU2CandidateClass::OnList);
    CHECK(non_2principal_membership(SU2Module({1, 2})) == SU2CandidateClass::OnList);  // sorts to [2,1]
    CHECK(non_2principal_membership(SU2Module({1, 1, 1})) == SU2CandidateClass::ThreeR1);
    CHECK(non_2principal_membership(SU2Module({5})) == SU2CandidateClass::OffList);
    CHECK(non_2principal_membership(SU2Module({1, 3})) == SU2CandidateClass::OffList);
    CHECK(non_2principal_membership(SU2Module({4, 4})) == SU2CandidateClass::OffList);
}

TEST_CASE("characters stay palindromic through products and symmetric powers") {
    LaurentPoly chi = character_of_module(SU2Module({3, 2}));
    chi = chi + chi;
    for (int m = 0; m <= 8; ++m) CHECK(sym_power_character(chi, m).is_symmetric());
}
