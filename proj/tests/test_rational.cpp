#include <doctest.h>

#include "permstab/rational.hpp"

using permstab::Rational;

TEST_CASE("rationals normalize") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
}

TEST_CASE("rational arithmetic and order") {
    Rational a(1, 6), b(1, 3);
    CHECK(a + b == Rational(1, 2));
    CHECK(b - a == a);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(1, 2));
    CHECK(a < b);
    CHECK(Rational(5, 6) > Rational(2, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK_THROWS_AS(a / Rational(0), permstab::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), permstab::domain_error);
}

TEST_CASE("rational text form round-trips") {
    for (const char* s : {"0", "1", "-1", "2/3", "-7/13", "291"}) {
        Rational r = Rational::parse(s);
        CHECK(r.str() == s);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse(""), permstab::parse_error);
    CHECK_THROWS_AS(Rational::parse("1/x"), permstab::parse_error);
    CHECK_THROWS_AS(Rational::parse("/2"), permstab::parse_error);
}

TEST_CASE("rational overflow is loud") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), std::overflow_error);
}
