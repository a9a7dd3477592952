#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/errors.hpp"
#include "riordan/field.hpp"
#include "riordan/series.hpp"
#include "riordan/text.hpp"

using namespace riordan;

namespace {

Series S(const char* text) { return parse_series(text); }

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

TEST_CASE("construction and coefficient access")
{
  const Series s({1, 2, 3}, 5);
  CHECK(s.precision() == 5);
  CHECK(s.coeff(2) == Rational(3));
  CHECK(s.coeff(4).is_zero());
  CHECK(kind_of([&] { (void)s.coeff(5); }) == ErrorKind::CoefficientOutOfRange);
  CHECK(kind_of([] { Series({1, 2, 3}, 2); }) == ErrorKind::CoefficientOutOfRange);
  CHECK(kind_of([] { (void)Series::x(1); }) == ErrorKind::InvalidPrecision);
}

TEST_CASE("precisions must agree")
{
  CHECK(kind_of([] { (void)(Series::one(3) + Series::one(4)); }) == ErrorKind::PrecisionMismatch);
  CHECK(kind_of([] { (void)(Series::one(3) * Series::one(4)); }) == ErrorKind::PrecisionMismatch);
  CHECK(kind_of([] { (void)substitute(Series::one(3), Series::x(4)); }) ==
        ErrorKind::PrecisionMismatch);
}

TEST_CASE("valuation")
{
  CHECK(S("x^2 + x^3 + O(x^5)").valuation() == Valuation::exact(2));
  CHECK(Series::zero(5).valuation() == Valuation::at_least(5));
  CHECK(Valuation::at_least(5).str() == "AtLeast(5)");
  CHECK(saturating_sum(Valuation::exact(2), Valuation::exact(2), 5) == Valuation::exact(4));
  CHECK(saturating_sum(Valuation::exact(2), Valuation::exact(3), 5) == Valuation::at_least(5));
  CHECK(saturating_product(Valuation::exact(0), Valuation::at_least(5), 5) == Valuation::exact(0));
  CHECK(saturating_product(Valuation::exact(2), Valuation::exact(2), 5) == Valuation::exact(4));
  CHECK(saturating_product(Valuation::exact(3), Valuation::exact(2), 5) == Valuation::at_least(5));
}

TEST_CASE("multiplication truncates")
{
  const Series a = S("1 + x + O(x^4)");
  CHECK(a * a == S("1 + 2*x + x^2 + O(x^4)"));
  CHECK(mul_power(a, 3) == S("1 + 3*x + 3*x^2 + x^3 + O(x^4)"));
  CHECK(mul_power(a, 5) == S("1 + 5*x + 10*x^2 + 10*x^3 + O(x^4)"));
  CHECK(mul_inverse(a) == S("1 - x + x^2 - x^3 + O(x^4)"));
  CHECK(kind_of([] { (void)mul_inverse(S("x + O(x^3)")); }) == ErrorKind::NotAUnit);
}

TEST_CASE("substitution")
{
  const Series f = S("1 + x + x^2 + x^3 + x^4 + O(x^5)");
  CHECK(substitute(f, S("2*x + O(x^5)")) == S("1 + 2*x + 4*x^2 + 8*x^3 + 16*x^4 + O(x^5)"));
  CHECK(substitute(f, S("x^2 + O(x^5)")) == S("1 + x^2 + x^4 + O(x^5)"));
  CHECK(substitute(f, Series::zero(5)) == Series::one(5));
  CHECK(kind_of([&] { (void)substitute(f, S("1 + x + O(x^5)")); }) ==
        ErrorKind::SubstitutionOutsideIdeal);
  CHECK(comp_power(S("x + x^2 + O(x^5)"), 0) == Series::x(5));
  CHECK(comp_power(S("x + x^2 + O(x^5)"), 2) == S("x + 2*x^2 + 2*x^3 + x^4 + O(x^5)"));
}

TEST_CASE("compositional inverse of x + x^2")
{
  const Series sigma = S("x + x^2 + O(x^5)");
  const Series inv = comp_inverse(sigma);
  CHECK(inv == S("x - x^2 + 2*x^3 - 5*x^4 + O(x^5)"));
  CHECK(substitute(sigma, inv) == Series::x(5));
  CHECK(substitute(inv, sigma) == Series::x(5));
  CHECK(kind_of([] { (void)comp_inverse(S("x^2 + O(x^5)")); }) ==
        ErrorKind::NotCompositionallyInvertible);
  CHECK(kind_of([] { (void)comp_inverse(S("1 + x + O(x^5)")); }) ==
        ErrorKind::SubstitutionOutsideIdeal);
}

TEST_CASE("binomial, exp and log")
{
  CHECK(binomial_series(Rational(2), 5) == S("1 + 2*x + x^2 + O(x^5)"));
  CHECK(binomial_series(Rational(-1), 4) == S("1 - x + x^2 - x^3 + O(x^4)"));
  CHECK(binomial_series(Rational(1, 2), 3) == S("1 + 1/2*x - 1/8*x^2 + O(x^3)"));
  const Series e = exp_series(S("x + O(x^5)"));
  CHECK(e == S("1 + x + 1/2*x^2 + 1/6*x^3 + 1/24*x^4 + O(x^5)"));
  CHECK(log_series(e) == S("x + O(x^5)"));
  CHECK(log_series(S("1 + x + O(x^4)")) == S("x - 1/2*x^2 + 1/3*x^3 + O(x^4)"));
  CHECK(kind_of([] { (void)exp_series(S("1 + x + O(x^4)")); }) == ErrorKind::PreconditionViolation);
  CHECK(kind_of([] { (void)log_series(S("2 + x + O(x^4)")); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("truncate")
{
  const Series s = S("1 + 2*x + 3*x^2 + O(x^3)");
  CHECK(s.truncate(2) == S("1 + 2*x + O(x^2)"));
  CHECK(kind_of([&] { (void)s.truncate(4); }) == ErrorKind::InvalidPrecision);
  CHECK(kind_of([&] { (void)s.truncate(0); }) == ErrorKind::InvalidPrecision);
}

TEST_CASE("the algorithms are generic over the field")
{
  using F = ModP<7>;
  using P = BasicSeries<F>;
  const P sigma({F(0), F(1), F(1)}, 5);
  const P inv = comp_inverse(sigma);
  CHECK(substitute(sigma, inv) == P::x(5));
  // x - x^2 + 2x^3 - 5x^4 reduced mod 7
  CHECK(inv == P({F(0), F(1), F(6), F(2), F(2)}, 5));
  const P u({F(1), F(3)}, 4);
  CHECK(u * mul_inverse(u) == P::one(4));
}
