#include <cstdint>
#include <random>

#include "doctest.h"
#include "symquot/bigint.hpp"
#include "symquot/rational.hpp"

using namespace symquot;

TEST_CASE("BigInt construction and printing") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1000000000LL).to_string() == "1000000000");
    CHECK(BigInt("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK(BigInt("-000123").to_string() == "-123");
    CHECK(BigInt(INT64_MAX).to_int64() == INT64_MAX);
    CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("12x"), std::invalid_argument);
}

TEST_CASE("BigInt arithmetic agrees with native arithmetic on random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int iter = 0; iter < 3000; ++iter) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt big_prod = BigInt(a) * BigInt(b);
        __int128 back = 0;
        bool neg = big_prod.sign() < 0;
        for (char c : big_prod.abs().to_string()) back = back * 10 + (c - '0');
        if (neg) back = -back;
        CHECK(back == prod);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("BigInt multi-limb division invariant a = q*b + r with 0 <= |r| < |b|") {
    std::mt19937_64 rng(999);
    auto random_big = [&](int limbs) {
        std::string s = std::to_string(1 + rng() % 9);
        for (int i = 0; i < limbs * 9; ++i) s += static_cast<char>('0' + rng() % 10);
        BigInt v(s);
        return (rng() & 1) ? -v : v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 5));
        BigInt b = random_big(1 + static_cast<int>(rng() % 3));
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("BigInt gcd and pow") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::pow(BigInt(3), 20).to_string() == "3486784401");
    CHECK(BigInt::pow(BigInt(10), 30).to_string() == "1" + std::string(30, '0'));
}

TEST_CASE("Rational normalization is idempotent and exact") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(4));
    CHECK(Rational(r.num(), r.den()) == r);
    CHECK(Rational(0).to_string() == "0/1");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("Rational arithmetic: (a/b)*(b/a) = 1 for nonzero inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-500, 500);
    for (int iter = 0; iter < 500; ++iter) {
        long long p = dist(rng), q = dist(rng);
        if (p == 0 || q == 0) continue;
        Rational x{BigInt(p), BigInt(q)};
        CHECK(x * x.inverse() == Rational(1));
        CHECK(x + (-x) == Rational(0));
        CHECK((x / x) == Rational(1));
    }
}

TEST_CASE("Rational parse and serialize round trip") {
    CHECK(Rational::parse("3/6") == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("5/1").to_string() == "5/1");
    CHECK(Rational::parse(Rational(BigInt(22), BigInt(-7)).to_string()) ==
          Rational(BigInt(-22), BigInt(7)));
    CHECK(Rational(7).to_display_string() == "7");
    CHECK(Rational(BigInt(1), BigInt(3)).to_display_string() == "1/3");
}

TEST_CASE("Rational ordering by cross multiplication") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(2) > Rational(BigInt(3), BigInt(2)));
}
