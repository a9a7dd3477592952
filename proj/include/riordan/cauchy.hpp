#pragma once

#include <cstddef>

#include "riordan/calculus.hpp"

namespace riordan {

/// Element sum_n f_n base^{x|n} of K[[mu+, sigma+]], stored through its
/// coefficient sequence f (unique, since the calculus map is injective for
/// a nonzero base). All arithmetic acts on the representation; the pair is
/// only built by realize().
///
/// Elements over different base points live in different algebras and never
/// mix: binary operations throw BaseMismatch.
class CauchyElement
{
public:
  CauchyElement(IdealElement base, Series rep);

  static CauchyElement unit(const IdealElement& base);
  /// delta^{(d)}, which realizes to base^{x|d}.
  static CauchyElement delta(const IdealElement& base, std::size_t d);

  const Series& rep() const { return rep_; }
  const IdealElement& base() const { return base_; }
  std::size_t precision() const { return rep_.precision(); }

  CauchyElement truncate(std::size_t n) const;

  CauchyElement& operator+=(const CauchyElement& o);
  CauchyElement& operator-=(const CauchyElement& o);
  friend CauchyElement operator+(CauchyElement a, const CauchyElement& b) { return a += b; }
  friend CauchyElement operator-(CauchyElement a, const CauchyElement& b) { return a -= b; }
  friend CauchyElement operator*(const Rational& alpha, const CauchyElement& a)
  {
    return CauchyElement(a.base_, alpha * a.rep_);
  }

  friend bool operator==(const CauchyElement&, const CauchyElement&) = default;

private:
  IdealElement base_;
  Series rep_;
};

CauchyElement from_series(const IdealElement& base, const Series& f);
RiordanElement realize(const CauchyElement& e);

/// Cauchy product of representations. Commutative, unlike x|.
CauchyElement star_mul(const CauchyElement& a, const CauchyElement& b);
CauchyElement star_power(const CauchyElement& a, std::size_t n);

/// For rep = c (1 + g): (1/c) sum_n (-1)^n (g)^{*n}. Throws NotStarInvertible
/// when the constant term is zero.
CauchyElement star_inverse(const CauchyElement& a);

CauchyElement star_exp(const CauchyElement& a);
CauchyElement star_log(const CauchyElement& a);

/// (unit + u)^{*lambda} = sum_n C(lambda, n) u^{*n}; requires rep(a)_0 = 1.
CauchyElement star_generalized_power(const CauchyElement& a, const Rational& lambda);

/// a^{*alpha} * a^{*beta} == a^{*(alpha + beta)}
bool one_parameter_check(const CauchyElement& a, const Rational& alpha, const Rational& beta);

} // namespace riordan
