#include <doctest.h>

#include "sphavg/rational.hpp"

using namespace sphavg;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/5") == Rational(3, 5));
    CHECK(parse_rational(" -2 ") == Rational(-2));
    CHECK(parse_rational("6/10") == Rational(3, 5));
    CHECK(parse_rational("+4/2") == Rational(2));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("a/b"), parse_error);
    CHECK_THROWS_AS(parse_rational("1 2"), parse_error);
}

TEST_CASE("decimals are rejected with a position") {
    try {
        parse_rational("0.5", 10);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position == 11);
    }
}

TEST_CASE("rational formatting") {
    CHECK(rational_string(Rational(3, 5)) == "3/5");
    CHECK(rational_string(Rational(4)) == "4");
    CHECK(rational_string(Rational(-1, 3)) == "-1/3");
    CHECK(rational_string(Rational(0)) == "0");
}

TEST_CASE("int64 extraction") {
    CHECK(rational_num_i64(Rational(2, 5)) == 2);
    CHECK(rational_den_i64(Rational(2, 5)) == 5);
    Rational huge = 1;
    for (int i = 0; i < 5; ++i) huge *= Rational(1000000000);
    CHECK_THROWS_AS(rational_num_i64(huge), error);
}

TEST_CASE("to_double") {
    CHECK(to_double(Rational(1, 2)) == 0.5);
    CHECK(to_double(Rational(2, 3)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}
