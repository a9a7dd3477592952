#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/riordan.hpp"
#include "riordan/text.hpp"

using namespace riordan;

namespace {

RiordanElement P(const char* text, std::size_t n = 5) { return parse_pair(text, n); }

ErrorKind kind_of(auto&& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no riordan::Error thrown");
  return ErrorKind::PreconditionViolation;
}

}

TEST_CASE("pairs need sigma(0) = 0 and precision >= 2")
{
  CHECK(kind_of([] { RiordanElement(Series::one(3), Series::one(3)); }) ==
        ErrorKind::SubstitutionOutsideIdeal);
  CHECK(kind_of([] { RiordanElement(Series::one(1), Series::zero(1)); }) ==
        ErrorKind::InvalidPrecision);
  CHECK(kind_of([] { RiordanElement(Series::one(3), Series::x(4)); }) ==
        ErrorKind::PrecisionMismatch);
}

TEST_CASE("semi-direct product")
{
  const RiordanElement a = P("(1 + x ; x + x^2)");
  CHECK(rtimes(a, a) == P("(1 + 2*x + 2*x^2 + x^3 ; x + 2*x^2 + 2*x^3 + x^4)"));
  CHECK(rtimes_power(a, 2) == rtimes(a, a));
  CHECK(rtimes_power(a, 0) == identity(5));
  CHECK(rtimes(identity(5), a) == a);
  CHECK(rtimes(a, identity(5)) == a);
  CHECK(rtimes(zero_element(5), a) == zero_element(5));
  // (mu1 o sigma2) mu2, sigma1 o sigma2
  CHECK(rtimes(P("(x ; 0)"), P("(1 ; 2*x)")) == P("(2*x ; 0)"));
}

TEST_CASE("left distributivity fails")
{
  const RiordanElement a = P("(0 ; x^2)"), b = P("(0 ; x)"), c = P("(0 ; -x)");
  CHECK(rtimes(a, b + c) == zero_element(5));
  CHECK(rtimes(a, b) + rtimes(a, c) == P("(0 ; 2*x^2)"));
}

TEST_CASE("ideal and group membership")
{
  CHECK(is_ideal(P("(x ; x^2)")));
  CHECK(is_ideal(zero_element(5)));
  CHECK_FALSE(is_ideal(P("(1 ; x^2)")));
  CHECK_FALSE(is_ideal(P("(x ; x)")));
  CHECK(is_group(P("(1 + x ; x + x^2)")));
  CHECK_FALSE(is_group(P("(2 ; x)")));
  CHECK(is_unit(P("(2 ; 3*x)")));
  CHECK_FALSE(is_unit(P("(2 ; x^2)")));
  CHECK(kind_of([] { IdealElement(P("(1 ; x)")); }) == ErrorKind::NotInIdeal);
  CHECK(kind_of([] { GroupElement(P("(0 ; x)")); }) == ErrorKind::NotGroupElement);
  CHECK(GroupElement(P("(1 + x ; x + x^2)")).ideal_part().element() == P("(x ; x^2)"));
}

TEST_CASE("group inverse")
{
  const GroupElement g(P("(1 + x ; x + x^2)"));
  const GroupElement inv = group_inverse(g);
  CHECK(inv.element() == P("(1 - x + 2*x^2 - 5*x^3 + 14*x^4 ; x - x^2 + 2*x^3 - 5*x^4)"));
  CHECK(rtimes(g.element(), inv.element()) == identity(5));
  CHECK(rtimes(inv.element(), g.element()) == identity(5));
}

TEST_CASE("truncation of pairs")
{
  const RiordanElement a = P("(1 + x ; x + x^2)");
  CHECK(rtimes(a, a).truncate(3) == rtimes(a.truncate(3), a.truncate(3)));
  CHECK(a.truncate(2) == P("(1 + x ; x)", 2));
}
