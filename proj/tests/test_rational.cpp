#include <catch2/catch_amalgamated.hpp>

#include "ramval/rational.hpp"

using namespace ramval;

TEST_CASE("rationals reduce and compare exactly") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(1, -2));
    CHECK(Rat(6, -3) == Rat(-2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(7, 1).is_integer());
    CHECK_FALSE(Rat(7, 2).is_integer());
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(3, 4) * Rat(2, 9) == Rat(1, 6));
    CHECK(Rat(3, 4) / Rat(9, 2) == Rat(1, 6));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
}

TEST_CASE("floor and adic valuation") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(4).floor() == 4);
    CHECK(Rat(8, 3).adic_valuation(2) == 3);
    CHECK(Rat(8, 3).adic_valuation(3) == -1);
    CHECK(Rat(5, 7).adic_valuation(2) == 0);
}

TEST_CASE("parse and print round-trip") {
    CHECK(Rat::parse("-5/9") == Rat(-5, 9));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK(Rat(-5, 9).str() == "-5/9");
    CHECK(Rat(3).str() == "3");
    CHECK_THROWS_AS(Rat::parse("a/b"), InvalidInput);
    CHECK_THROWS_AS(Rat::parse("1/2x"), InvalidInput);
    for (int n = -20; n <= 20; ++n)
        for (int d = 1; d <= 12; ++d) CHECK(Rat::parse(Rat(n, d).str()) == Rat(n, d));
}

TEST_CASE("rational gcd generates the right lattice") {
    CHECK(rat_gcd(Rat(1), Rat(1, 2)) == Rat(1, 2));
    CHECK(rat_gcd(Rat(2, 3), Rat(1, 2)) == Rat(1, 6));
    CHECK(rat_gcd(Rat(0), Rat(-3, 4)) == Rat(3, 4));
    // g divides both and any common divisor of the lattice divides g
    Rat g = rat_gcd(Rat(9, 4), Rat(15, 14));
    CHECK((Rat(9, 4) / g).is_integer());
    CHECK((Rat(15, 14) / g).is_integer());
    CHECK(g == Rat(3, 28));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rat big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
