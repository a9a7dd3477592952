#include "riordan/generators.hpp"

#include <algorithm>

namespace riordan {

Rational Generator::rational()
{
  if (chance(1, 4))
    return Rational(between(-3, 3));
  return Rational(between(-6, 6), between(1, 4));
}

Rational Generator::nonzero_rational()
{
  for (;;) {
    Rational r = rational();
    if (!r.is_zero())
      return r;
  }
}

Series Generator::series_with_valuation(std::size_t n, std::size_t v)
{
  std::vector<Rational> c(n);
  c[v] = nonzero_rational();
  // Sparse tails are common in practice; keep some of them.
  const unsigned density = chance(1, 3) ? 1 : 3;
  for (std::size_t k = v + 1; k < n; ++k)
    if (chance(density, 4))
      c[k] = rational();
  return Series(std::move(c));
}

Series Generator::series(std::size_t n, std::size_t min_valuation)
{
  if (min_valuation >= n || chance(1, 16))
    return Series::zero(n);
  const std::size_t span = n - min_valuation;
  // min of two uniform draws: small valuations dominate
  const std::size_t v = min_valuation + std::min(below(span), below(span));
  return series_with_valuation(n, v);
}

Series Generator::unit_series(std::size_t n)
{
  return series_with_valuation(n, 0);
}

Series Generator::unipotent_series(std::size_t n)
{
  return Series::one(n) + m_series(n);
}

RiordanElement Generator::pair(std::size_t n)
{
  return RiordanElement(series(n), m_series(n));
}

IdealElement Generator::ideal(std::size_t n)
{
  switch (below(8)) {
  case 0: return IdealElement(RiordanElement(Series::zero(n), Series::zero(n)));
  case 1: return IdealElement(RiordanElement(series(n, 1), Series::zero(n)));
  case 2: return IdealElement(RiordanElement(Series::zero(n), series(n, 2)));
  default: return IdealElement(RiordanElement(series(n, 1), series(n, 2)));
  }
}

IdealElement Generator::nonzero_ideal(std::size_t n)
{
  for (;;) {
    IdealElement e = ideal(n);
    if (!e.mu().is_zero() || !e.sigma().is_zero())
      return e;
  }
}

GroupElement Generator::group(std::size_t n)
{
  return GroupElement(RiordanElement(unipotent_series(n), Series::x(n) + series(n, 2)));
}

} // namespace riordan
