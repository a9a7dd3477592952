#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/errors.hpp"
#include "riordan/text.hpp"

using namespace riordan;

TEST_CASE("series printing")
{
  CHECK(format_series(Series({1, -1, Rational(3, 2)}, 4)) == "1 - x + 3/2*x^2 + O(x^4)");
  CHECK(format_series(Series({0, -1}, 3)) == "-x + O(x^3)");
  CHECK(format_series(Series::zero(3)) == "0 + O(x^3)");
  CHECK(format_series_body(Series({0, 0, 2}, 3)) == "2*x^2");
}

TEST_CASE("series parsing")
{
  CHECK(parse_series("1 + x + O(x^3)") == Series({1, 1}, 3));
  CHECK(parse_series("-2x^2 + 1/3", 4) == Series({Rational(1, 3), 0, -2}, 4));
  CHECK(parse_series("x + x", 3) == Series({0, 2}, 3));
  CHECK(parse_series("O(x^3)") == Series::zero(3));
  CHECK(parse_series("x + O(x^3)", 10).precision() == 3);
}

TEST_CASE("parse errors carry offset and expectations")
{
  CHECK_THROWS_AS(parse_series("x^5", 4), ParseError);
  CHECK_THROWS_AS(parse_series("1 + x"), ParseError);
  CHECK_THROWS_AS(parse_series("1/0 + O(x^3)"), ParseError);
  CHECK_THROWS_AS(parse_series("1 + + x", 3), ParseError);
  CHECK_THROWS_AS(parse_series("y", 3), ParseError);
  try {
    parse_series("1 + x^9", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse_series("1 + ", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("pairs")
{
  const RiordanElement p = parse_pair("(1 + x ; x + x^2)", 5);
  CHECK(p.mu() == Series({1, 1}, 5));
  CHECK(p.sigma() == Series({0, 1, 1}, 5));
  CHECK(format_pair(p) == "(1 + x ; x + x^2)");
  CHECK_THROWS_AS(parse_pair("(1 + O(x^3) ; x + O(x^4))"), ParseError);
  CHECK_THROWS_AS(parse_pair("(1 ; x", 4), ParseError);
  CHECK_THROWS_AS(parse_pair("(1 ; 1 + x)", 4), Error);
}
