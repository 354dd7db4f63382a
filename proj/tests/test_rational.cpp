#include <catch2/catch_amalgamated.hpp>

#include "fanostab/rational.hpp"

using namespace fanostab;

TEST_CASE("make_rational normalizes sign and reduces") {
  CHECK(make_rational(Integer(2), Integer(4)) == Rational(1, 2));
  CHECK(make_rational(Integer(-6), Integer(4)) == Rational(-3, 2));
  CHECK(make_rational(Integer(1), Integer(-2)) == Rational(-1, 2));
  CHECK(make_rational(Integer(-1), Integer(-2)) == Rational(1, 2));
  CHECK(make_rational(Integer(0), Integer(-7)) == Rational(0));
  CHECK_THROWS_AS(make_rational(Integer(3), Integer(0)), input_error);
}

TEST_CASE("rational rendering is p/q in lowest terms") {
  CHECK(to_string(make_rational(Integer(32), Integer(3))) == "32/3");
  CHECK(to_string(make_rational(Integer(-14), Integer(1))) == "-14");
  CHECK(to_string(make_rational(Integer(14), Integer(-3))) == "-14/3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(make_rational(Integer(10), Integer(4))) == "5/2");
}

TEST_CASE("integer token parsing") {
  CHECK(is_integer_token("-42"));
  CHECK(is_integer_token("0"));
  CHECK_FALSE(is_integer_token(""));
  CHECK_FALSE(is_integer_token("-"));
  CHECK_FALSE(is_integer_token("3/4"));
  CHECK_FALSE(is_integer_token("1x"));
  CHECK(parse_integer("-12") == Integer(-12));
  CHECK(parse_integer("123456789012345678901234567890") ==
        Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer("4/2"), input_error);
  CHECK_THROWS_AS(parse_integer("abc"), input_error);
  CHECK_THROWS_AS(parse_integer(""), input_error);
}

TEST_CASE("rational parsing accepts p/q and bare integers, normalizing") {
  CHECK(parse_rational("32/3") == make_rational(Integer(32), Integer(3)));
  CHECK(parse_rational("-14") == Rational(-14));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/-4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
  CHECK_THROWS_AS(parse_rational("x/2"), input_error);
}

TEST_CASE("parse and render round-trip") {
  for (int p = -25; p <= 25; ++p)
    for (int q = 1; q <= 12; ++q) {
      const Rational r = make_rational(Integer(p), Integer(q));
      CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("floor and ceiling division follow the mathematical convention") {
  CHECK(floor_div(Integer(7), Integer(2)) == Integer(3));
  CHECK(floor_div(Integer(-7), Integer(2)) == Integer(-4));
  CHECK(floor_div(Integer(7), Integer(-2)) == Integer(-4));
  CHECK(ceil_div(Integer(7), Integer(2)) == Integer(4));
  CHECK(ceil_div(Integer(-7), Integer(2)) == Integer(-3));
  CHECK(ceil_div(Integer(-4), Integer(3)) == Integer(-1));
  CHECK_THROWS_AS(floor_div(Integer(1), Integer(0)), input_error);
  CHECK_THROWS_AS(ceil_div(Integer(1), Integer(0)), input_error);
  // identity: ceil(a/b) == -floor(-a/b)
  for (int a = -9; a <= 9; ++a)
    for (int b = -4; b <= 4; ++b) {
      if (b == 0) continue;
      CHECK(ceil_div(Integer(a), Integer(b)) == -floor_div(Integer(-a), Integer(b)));
    }
}

TEST_CASE("rational floor and ceiling") {
  CHECK(rational_floor(make_rational(Integer(7), Integer(3))) == Integer(2));
  CHECK(rational_floor(make_rational(Integer(-7), Integer(3))) == Integer(-3));
  CHECK(rational_ceil(make_rational(Integer(7), Integer(3))) == Integer(3));
  CHECK(rational_ceil(make_rational(Integer(-7), Integer(3))) == Integer(-2));
  CHECK(rational_floor(Rational(5)) == Integer(5));
  CHECK(rational_ceil(Rational(-5)) == Integer(-5));
}
