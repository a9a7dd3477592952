#include "riordan/calculus.hpp"

#include <cassert>
#include <string>

namespace riordan {

std::size_t term_bound(const IdealElement& base, std::size_t n_precision)
{
  if (n_precision == 0 || n_precision > base.precision())
    throw Error(ErrorKind::PreconditionViolation,
                "term_bound: precision " + std::to_string(n_precision) +
                    " outside 1.." + std::to_string(base.precision()));
  const Valuation v_mu = base.mu().valuation();
  const Valuation v_sigma = base.sigma().valuation();
  // A component vanishing modulo x^n_precision contributes nothing below it.
  const bool mu_zero = v_mu.known_at_least(n_precision);
  const bool sigma_zero = v_sigma.known_at_least(n_precision);

  for (std::size_t n = 1;; ++n) {
    // 2^n - 1 grows past any size_t precision long before overflow matters
    const std::size_t pow2 = n < 63 ? (std::size_t{1} << n) : ~std::size_t{0};
    const bool first_vanishes = mu_zero || (sigma_zero && n >= 2) ||
                                (pow2 - 1 >= (n_precision + v_mu.value() - 1) / v_mu.value());
    const bool second_vanishes = sigma_zero || pow2 >= n_precision;
    if (first_vanishes && second_vanishes)
      return n;
  }
}

PhiMap::PhiMap(IdealElement base) : base_(std::move(base))
{
  const std::size_t bound = riordan::term_bound(base_, base_.precision());
  powers_.reserve(bound);
  powers_.push_back(identity(base_.precision()));
  for (std::size_t n = 1; n < bound; ++n)
    powers_.push_back(rtimes(powers_.back(), base_.element()));
#ifndef NDEBUG
  const RiordanElement beyond = rtimes(powers_.back(), base_.element());
  assert(beyond == zero_element(base_.precision()));
  assert(rtimes(beyond, base_.element()) == zero_element(base_.precision()));
#endif
}

RiordanElement PhiMap::operator()(const Series& f) const
{
  Series::require_same_precision(f, base_.mu(), "phi_apply");
  RiordanElement acc = zero_element(precision());
  for (std::size_t n = 0; n < powers_.size() && n < f.precision(); ++n)
    if (!f.coeff(n).is_zero())
      acc += f.coeff(n) * powers_[n];
  return acc;
}

RiordanElement phi_apply(const IdealElement& base, const Series& f)
{
  return PhiMap(base)(f);
}

bool phi_shift_identity_check(const IdealElement& base, const Series& g, std::size_t m)
{
  const std::size_t n = base.precision();
  const PhiMap phi(base);
  const Series shifted = m < n ? Series::monomial(Rational(1), m, n) * g : Series::zero(n);
  return phi(shifted) == rtimes(phi(g), rtimes_power(base.element(), m));
}

GroupElement rtimes_binomial_power(const GroupElement& g, const Rational& lambda)
{
  const PhiMap phi(g.ideal_part());
  return GroupElement(phi(binomial_series(lambda, g.precision())));
}

namespace {

Series polynomial(std::vector<Rational> coeffs, std::size_t n)
{
  return Series(std::move(coeffs), n);
}

} // namespace

bool counterexample_check(std::size_t n)
{
  if (n < 5)
    throw Error(ErrorKind::PreconditionViolation, "counterexample_check needs precision >= 5");
  const GroupElement g(RiordanElement(polynomial({1, 1}, n), polynomial({0, 1, 1}, n)));

  const RiordanElement usual = rtimes_power(g.element(), 2);
  const RiordanElement binomial = rtimes_binomial_power(g, Rational(2)).element();

  const RiordanElement usual_expected(polynomial({1, 2, 2, 1}, n), polynomial({0, 1, 2, 2, 1}, n));
  const RiordanElement binomial_expected(polynomial({1, 2, 0, 1}, n),
                                         polynomial({0, 1, 2, 0, 1}, n));
  return usual == usual_expected && binomial == binomial_expected && usual != binomial;
}

} // namespace riordan
