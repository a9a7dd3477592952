#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/calculus.hpp"
#include "riordan/text.hpp"

using namespace riordan;

namespace {

RiordanElement P(const char* text, std::size_t n = 5) { return parse_pair(text, n); }

}

TEST_CASE("term bound")
{
  CHECK(term_bound(IdealElement(P("(x ; x^2)", 5)), 5) == 3);
  CHECK(term_bound(IdealElement(P("(x ; x^2)", 16)), 16) == 5);
  CHECK(term_bound(IdealElement(P("(0 ; x^2)", 8)), 8) == 3);
  CHECK(term_bound(IdealElement(P("(x ; 0)", 8)), 8) == 2);
  CHECK(term_bound(IdealElement(zero_element(8)), 8) == 1);
  CHECK_THROWS_AS(term_bound(IdealElement(zero_element(8)), 9), Error);
  CHECK_THROWS_AS(term_bound(IdealElement(zero_element(8)), 0), Error);
}

TEST_CASE("phi stores exactly the nonvanishing powers")
{
  const IdealElement base(P("(x ; x^2)", 12));
  const PhiMap phi(base);
  REQUIRE(phi.term_bound() == phi.powers().size());
  for (std::size_t n = 0; n < phi.term_bound(); ++n)
    CHECK(phi.powers()[n] == rtimes_power(base.element(), n));
  CHECK(rtimes_power(base.element(), phi.term_bound()) == zero_element(12));
}

TEST_CASE("phi of simple series")
{
  const IdealElement base(P("(x ; x^2)"));
  CHECK(phi_apply(base, Series::one(5)) == identity(5));
  CHECK(phi_apply(base, Series::x(5)) == base.element());
  CHECK(phi_apply(base, Series::zero(5)) == zero_element(5));
  CHECK_THROWS_AS(phi_apply(base, Series::one(4)), Error);
}

TEST_CASE("shift identity")
{
  const IdealElement base(P("(x + x^2 ; x^2 - x^3)", 8));
  const Series g = parse_series("1 - 2*x + x^3", 8);
  for (std::size_t m = 0; m <= 9; ++m)
    CHECK(phi_shift_identity_check(base, g, m));
}

TEST_CASE("binomial power of a group element")
{
  const GroupElement g(P("(1 + x ; x + x^2)"));
  CHECK(rtimes_binomial_power(g, Rational(2)).element() == P("(1 + 2*x + x^3 ; x + 2*x^2 + x^4)"));
  CHECK(rtimes_binomial_power(g, Rational(1)).element() == g.element());
  CHECK(rtimes_binomial_power(g, Rational(0)).element() == identity(5));
  CHECK(rtimes_power(g.element(), 2) == P("(1 + 2*x + 2*x^2 + x^3 ; x + 2*x^2 + 2*x^3 + x^4)"));
}

TEST_CASE("counterexample")
{
  CHECK(counterexample_check(5));
  CHECK(counterexample_check(9));
  CHECK_THROWS_AS(counterexample_check(4), Error);
}
