#include "riordan/riordan.hpp"

#include <cassert>

namespace riordan {

RiordanElement::RiordanElement(Series mu, Series sigma)
    : mu_(std::move(mu)), sigma_(std::move(sigma))
{
  Series::require_same_precision(mu_, sigma_, "pair");
  if (mu_.precision() < 2)
    throw Error(ErrorKind::InvalidPrecision, "pairs need precision at least 2");
  if (!sigma_.coeff(0).is_zero())
    throw Error(ErrorKind::SubstitutionOutsideIdeal,
                "second component of a pair must have zero constant term");
}

RiordanElement RiordanElement::truncate(std::size_t n) const
{
  return RiordanElement(mu_.truncate(n), sigma_.truncate(n));
}

RiordanElement& RiordanElement::operator+=(const RiordanElement& o)
{
  mu_ += o.mu_;
  sigma_ += o.sigma_;
  return *this;
}

RiordanElement& RiordanElement::operator-=(const RiordanElement& o)
{
  mu_ -= o.mu_;
  sigma_ -= o.sigma_;
  return *this;
}

RiordanElement identity(std::size_t n)
{
  return RiordanElement(Series::one(n), Series::x(n));
}

RiordanElement zero_element(std::size_t n)
{
  return RiordanElement(Series::zero(n), Series::zero(n));
}

RiordanElement rtimes(const RiordanElement& a, const RiordanElement& b)
{
  return RiordanElement(substitute(a.mu(), b.sigma()) * b.mu(),
                        substitute(a.sigma(), b.sigma()));
}

RiordanElement rtimes_power(const RiordanElement& a, std::size_t n)
{
  const std::size_t prec = a.precision();
  if (n == 0)
    return identity(prec);
  // iterate_k = sigma^{o k}; factor_k = mu o sigma^{o(k-1)}
  Series iterate = Series::x(prec);
  Series product = Series::one(prec);
  for (std::size_t k = 1; k <= n; ++k) {
    product = product * substitute(a.mu(), iterate);
    iterate = substitute(iterate, a.sigma());
  }
  return RiordanElement(std::move(product), std::move(iterate));
}

namespace {

bool coefficient_vanishes(const Series& s, std::size_t k)
{
  return k >= s.precision() || s.coeff(k).is_zero();
}

bool coefficient_is(const Series& s, std::size_t k, const Rational& v)
{
  return k >= s.precision() || s.coeff(k) == v;
}

} // namespace

bool is_ideal(const RiordanElement& a)
{
  return a.mu().valuation().known_at_least(1) && a.sigma().valuation().known_at_least(2);
}

bool is_group(const RiordanElement& a)
{
  return a.mu().coeff(0).is_one() && coefficient_is(a.sigma(), 1, Rational(1));
}

bool is_unit(const RiordanElement& a)
{
  return !a.mu().coeff(0).is_zero() && !coefficient_vanishes(a.sigma(), 1);
}

IdealElement::IdealElement(RiordanElement e) : e_(std::move(e))
{
  if (!is_ideal(e_))
    throw Error(ErrorKind::NotInIdeal,
                "pair is not in the ideal: need nu(mu) >= 1 and nu(sigma) >= 2");
}

GroupElement::GroupElement(RiordanElement e) : e_(std::move(e))
{
  if (!is_group(e_))
    throw Error(ErrorKind::NotGroupElement,
                "pair is not in the Riordan group: need mu(0) = 1 and <sigma, x> = 1");
}

IdealElement GroupElement::ideal_part() const
{
  return IdealElement(e_ - identity(precision()));
}

GroupElement group_inverse(const GroupElement& a)
{
  Series sigma_bar = comp_inverse(a.sigma());
  Series mu_bar = mul_inverse(substitute(a.mu(), sigma_bar));
  RiordanElement b(std::move(mu_bar), std::move(sigma_bar));
#ifndef NDEBUG
  const RiordanElement one = identity(a.precision());
  assert(rtimes(a.element(), b) == one);
  assert(rtimes(b, a.element()) == one);
#endif
  return GroupElement(std::move(b));
}

bool ideal_closure_check(const RiordanElement& a, const IdealElement& p)
{
  return is_ideal(rtimes(a, p.element())) && is_ideal(rtimes(p.element(), a));
}

} // namespace riordan
