#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/cauchy.hpp"
#include "riordan/text.hpp"

using namespace riordan;

namespace {

const IdealElement kBase(parse_pair("(x ; x^2)", 6));

Series S(const char* text) { return parse_series(text, 6); }

}

TEST_CASE("construction")
{
  const CauchyElement u = CauchyElement::unit(kBase);
  CHECK(u.rep() == Series::one(6));
  CHECK(realize(u) == identity(6));
  CHECK(realize(CauchyElement::delta(kBase, 1)) == kBase.element());
  CHECK(realize(CauchyElement::delta(kBase, 2)) == rtimes_power(kBase.element(), 2));
  CHECK_THROWS_AS(CauchyElement(kBase, Series::one(5)), Error);
}

TEST_CASE("bases must match")
{
  const IdealElement other(parse_pair("(0 ; x^2)", 6));
  CHECK_THROWS_AS(CauchyElement::unit(kBase) + CauchyElement::unit(other), Error);
}

TEST_CASE("star operations")
{
  const CauchyElement a = from_series(kBase, S("1 + x"));
  CHECK(star_mul(a, a).rep() == S("1 + 2*x + x^2"));
  CHECK(star_power(a, 3).rep() == S("1 + 3*x + 3*x^2 + x^3"));
  CHECK(star_inverse(a).rep() == S("1 - x + x^2 - x^3 + x^4 - x^5"));
  CHECK(star_mul(a, star_inverse(a)) == CauchyElement::unit(kBase));
  CHECK(star_inverse(from_series(kBase, S("2"))).rep() == S("1/2"));
  CHECK_THROWS_AS(star_inverse(from_series(kBase, S("x"))), Error);
  const CauchyElement d = CauchyElement::delta(kBase, 1);
  CHECK(star_exp(d).rep() == S("1 + x + 1/2*x^2 + 1/6*x^3 + 1/24*x^4 + 1/120*x^5"));
  CHECK(star_log(star_exp(d)) == d);
}

TEST_CASE("generalized powers")
{
  const CauchyElement a = from_series(kBase, S("1 + x"));
  CHECK(star_generalized_power(a, Rational(2)) == star_mul(a, a));
  CHECK(star_generalized_power(a, Rational(-1)) == star_inverse(a));
  const CauchyElement root = star_generalized_power(a, Rational(1, 2));
  CHECK(star_mul(root, root) == a);
  CHECK(one_parameter_check(a, Rational(1, 3), Rational(-5, 2)));
  CHECK_THROWS_AS(star_generalized_power(from_series(kBase, S("2 + x")), Rational(1, 2)), Error);
}

TEST_CASE("realization of the displayed genpow")
{
  const IdealElement base(parse_pair("(x ; x^2)", 5));
  const CauchyElement a = CauchyElement::unit(base) + CauchyElement::delta(base, 1);
  CHECK(realize(star_generalized_power(a, Rational(2))) ==
        parse_pair("(1 + 2*x + x^3 ; x + 2*x^2 + x^4)", 5));
  CHECK(format_cauchy(a) == "[1, 1, 0, 0, 0] over (x ; x^2) + O(n^5)");
}
