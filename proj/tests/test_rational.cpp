#include <doctest.h>

#include "mpinv/rational.hpp"

#include <stdexcept>

using mpinv::make_rational;
using mpinv::parse_rational;
using mpinv::Rational;
using mpinv::to_string;

TEST_CASE("make_rational reduces and normalizes the sign") {
    CHECK(make_rational(4, 6) == Rational(2, 3));
    CHECK(make_rational(-4, 6) == Rational(-2, 3));
    CHECK(make_rational(4, -6) == Rational(-2, 3));
    CHECK(make_rational(-4, -6) == Rational(2, 3));
    CHECK(make_rational(0, 5) == Rational(0));
    CHECK(make_rational(9, 3) == Rational(3));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("to_string uses p/q with the sign on the numerator") {
    CHECK(to_string(make_rational(2, 3)) == "2/3");
    CHECK(to_string(make_rational(-5, 7)) == "-5/7");
    CHECK(to_string(make_rational(14, 7)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(make_rational(-21, 7)) == "-3");
}

TEST_CASE("parse_rational round-trips and normalizes") {
    CHECK(parse_rational("2/3") == make_rational(2, 3));
    CHECK(parse_rational("-5/7") == make_rational(-5, 7));
    CHECK(parse_rational("7/14") == make_rational(1, 2));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-42") == Rational(-42));
    CHECK(parse_rational("0") == Rational(0));

    for (const char* text : {"2/3", "-5/7", "123456789123456789/2", "0", "-1"})
        CHECK(to_string(parse_rational(text)) == text);
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* bad : {"", "-", "1/0", "1/-2", "a", "1.5", "1/2/3", " 1", "1 ", "+1"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("arithmetic stays exact for values far beyond doubles") {
    Rational sum = 0;
    for (int k = 1; k <= 50; ++k) sum += make_rational(1, k);
    // Harmonic number H_50, an exact fraction no float reproduces.
    CHECK(to_string(sum) ==
          "13943237577224054960759/3099044504245996706400");
    CHECK(sum - sum == 0);
}
