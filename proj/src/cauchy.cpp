#include "riordan/cauchy.hpp"

namespace riordan {

namespace {

void require_same_base(const CauchyElement& a, const CauchyElement& b, const char* op)
{
  if (!(a.base() == b.base()))
    throw Error(ErrorKind::BaseMismatch, std::string(op) + ": elements over different bases");
}

void require_unit_constant(const CauchyElement& a, const char* op)
{
  if (!a.rep().coeff(0).is_one())
    throw Error(ErrorKind::PreconditionViolation,
                std::string(op) + ": representation must have constant term 1");
}

} // namespace

CauchyElement::CauchyElement(IdealElement base, Series rep)
    : base_(std::move(base)), rep_(std::move(rep))
{
  Series::require_same_precision(rep_, base_.mu(), "cauchy element");
}

CauchyElement CauchyElement::unit(const IdealElement& base)
{
  return CauchyElement(base, Series::one(base.precision()));
}

CauchyElement CauchyElement::delta(const IdealElement& base, std::size_t d)
{
  return CauchyElement(base, Series::monomial(Rational(1), d, base.precision()));
}

CauchyElement CauchyElement::truncate(std::size_t n) const
{
  return CauchyElement(IdealElement(base_.element().truncate(n)), rep_.truncate(n));
}

CauchyElement& CauchyElement::operator+=(const CauchyElement& o)
{
  require_same_base(*this, o, "add");
  rep_ += o.rep_;
  return *this;
}

CauchyElement& CauchyElement::operator-=(const CauchyElement& o)
{
  require_same_base(*this, o, "subtract");
  rep_ -= o.rep_;
  return *this;
}

CauchyElement from_series(const IdealElement& base, const Series& f)
{
  return CauchyElement(base, f);
}

RiordanElement realize(const CauchyElement& e)
{
  return phi_apply(e.base(), e.rep());
}

CauchyElement star_mul(const CauchyElement& a, const CauchyElement& b)
{
  require_same_base(a, b, "star_mul");
  return CauchyElement(a.base(), a.rep() * b.rep());
}

CauchyElement star_power(const CauchyElement& a, std::size_t n)
{
  return CauchyElement(a.base(), mul_power(a.rep(), n));
}

CauchyElement star_inverse(const CauchyElement& a)
{
  const Rational c = a.rep().coeff(0);
  if (c.is_zero())
    throw Error(ErrorKind::NotStarInvertible, "star_inverse: constant term is zero");
  const std::size_t n = a.precision();
  const Series g = (Rational(1) / c) * a.rep() - Series::one(n);
  std::vector<Rational> alternating(n);
  for (std::size_t k = 0; k < n; ++k)
    alternating[k] = Rational(k % 2 ? -1 : 1);
  return CauchyElement(a.base(),
                       (Rational(1) / c) * substitute(Series(std::move(alternating)), g));
}

CauchyElement star_exp(const CauchyElement& a)
{
  return CauchyElement(a.base(), exp_series(a.rep()));
}

CauchyElement star_log(const CauchyElement& a)
{
  return CauchyElement(a.base(), log_series(a.rep()));
}

CauchyElement star_generalized_power(const CauchyElement& a, const Rational& lambda)
{
  require_unit_constant(a, "star_generalized_power");
  const std::size_t n = a.precision();
  // u = a - unit has valuation >= 1, so u^{*k} starts at x^k and the
  // binomial series is exact once truncated at index n.
  return CauchyElement(a.base(),
                       substitute(binomial_series(lambda, n), a.rep() - Series::one(n)));
}

bool one_parameter_check(const CauchyElement& a, const Rational& alpha, const Rational& beta)
{
  return star_mul(star_generalized_power(a, alpha), star_generalized_power(a, beta)) ==
         star_generalized_power(a, alpha + beta);
}

} // namespace riordan
