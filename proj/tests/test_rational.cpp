#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "riordan/field.hpp"
#include "riordan/rational.hpp"

using riordan::Rational;

TEST_CASE("rationals are kept in lowest terms")
{
  Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(4, 2) == Rational(2));
}

TEST_CASE("arithmetic")
{
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a > b);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q with an optional sign")
{
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("+2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("large values stay exact")
{
  Rational f(1);
  for (int k = 1; k <= 30; ++k)
    f *= Rational(k);
  CHECK(f.str() == "265252859812191058636308480000000");
  CHECK((f / f).is_one());
}

TEST_CASE("stream output")
{
  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("prime field test type")
{
  using F = riordan::ModP<7>;
  static_assert(riordan::Field<F>);
  static_assert(riordan::Field<Rational>);
  const F three(3);
  CHECK((three * three.inverse()) == F(1));
  CHECK((F(1) / three) * F(3) == F(1));
  CHECK(F(-1).value() == 6);
  CHECK((F(5) + F(4)).value() == 2);
}
